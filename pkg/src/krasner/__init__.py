"""Finite Krasner F^(m,n)-hyperrings: axiom checking, F-hyperideal classification,
radicals, quotients, products and small-structure search."""
from .errors import (ConsistencyError, DomainError, KrasnerError, ParseError,
                     ResourceError, UsageError)
from .fuzzy import (Carrier, FuzzySubset, characteristic, equal, fuzzy_point, grade,
                    join, support, threshold_set, zero)
from .hyperstructure import (AxiomReport, HyperOperationTable, KrasnerStructure, extend,
                             iterated_g, validate_structure)
from .ideals import (IdealLattice, enumerate_ideals, f_radical, generated_ideal,
                     has_powers, is_f_hyperideal, is_f_invertible, is_maximal, is_primary, is_prime,
                     is_prime_by_subsets, jacobson_radical, prime_disjoint_from)
from .constructions import (FiniteRing, Homomorphism, check_homomorphism,
                            is_hyperintegral_f_domain, natural_projection, preimage_ideal,
                            product, quotient, ring_lift, zmod)
from .search import SearchSpace, enumerate_structures, find_witness
from .document import parse, serialize

__version__ = "0.1.0"
