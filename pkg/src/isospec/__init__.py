"""/src/isospec/__init__.py

Isospectral, nonisometric metrics on odd spheres built from torus actions,
together with the numerical checks that certify them.
"""

__version__ = "0.1.0"
