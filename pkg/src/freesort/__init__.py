"""Free monoids, free commutative monoids, and sorting as a section.

Submodules:

``ualg``     signatures, finite algebras, terms and equational checking
``freemon``  words and indexed arrays as free monoids
``fcm``      bags, permutation relations and permutation combinators
``orders``   total, strict and meet-semilattice orders on finite carriers
``sorting``  sections, the two sorting axioms and the order round trips
``cli``      the ``freesort`` command
"""
from freesort.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
