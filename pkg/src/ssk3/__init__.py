"""Exact-arithmetic lattices, chambers, and characteristic-5 Kummer geometry.

Subpackages:

* ``ssk3.lattice``    exact even-lattice linear algebra
* ``ssk3.golay``      the binary Golay code on 24 points
* ``ssk3.leech``      the Leech lattice and Leech roots
* ``ssk3.fermat``     the sextic double plane over F_25 (fixture generator)
* ``ssk3.embeddings`` rank-22 Picard lattice inside the rank-26 unimodular one
* ``ssk3.chambers``   induced chambers, their walls and automorphisms
* ``ssk3.elliptic``   the supersingular curve y^2 = x^3 - 1 over F_25
* ``ssk3.quaternion`` its endomorphism order
* ``ssk3.kummer``     curves and configurations on the Kummer surface
* ``ssk3.cli``        JSON-report command line front end
"""

__version__ = "0.1.0"
