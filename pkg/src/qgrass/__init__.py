"""qgrass: exact verification toolkit for quantum Grassmann superalgebras,
quantum Weyl algebras of (m|n)-type, and the pointed Hopf algebras attached
to them."""

__version__ = "0.1.0"
