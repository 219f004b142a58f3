"""Computational kernel for finite bicategories.

Finite categories and bicategories with explicit composition tables, axiom
checkers that name every violated law instance, free bicategories on
2-computads with a decidable 2-cell word problem, morphisms /
transformations / modifications with their coherence checkers,
hom-bicategories, and strictification through representables.
"""
from .bicat import (Bicategory, EquivalenceWitness, One, Two, cat_as_bicategory,
                    check_bicategory, find_equivalences,
                    group_cocycle_bicategory, is_two_category, opposite,
                    whisker_left, whisker_right)
from .errors import (AssignmentError, BicatError, BudgetExceeded,
                     NotCanonicalError, NotParallelError, ParseError,
                     StructureError)
from .fincat import (DEFAULT_BUDGET, FinCat, Functor, NatTrans, check_fincat,
                     check_functor, check_nattrans, compose_functors,
                     enumerate_functors, enumerate_nattrans, identity_functor)
from .freebicat import (Assignment, CanonicalWitness, TwoComputad,
                        check_assignment, coherence_equal, diagram1_legs,
                        eval_canonical, eval_one, eval_two, is_canonical,
                        normalize, rebracket, two_cell_equal)
from .grammar import (parse_one_term, parse_two_term, print_one_term,
                      print_two_term)
from .homs import (HomBicategory, HomBicatSpec, build_hom_bicategory,
                   enumerate_modifications, enumerate_transformations,
                   is_biequivalence)
from .maps import (Modification, Morphism, Transformation, check_modification,
                   check_morphism, check_transformation, classify_strength,
                   compose_morphisms, compose_transformations,
                   identity_modification, identity_morphism,
                   identity_transformation, local_property)
from .report import Report, Violation
from .structio import parse_structure, parse_structure_text, serialize_structure
from .yoneda import (Strictification, YonedaPackage, check_local_equivalence_of_Y,
                     check_reflection, strictify, transport_assignment,
                     transport_canonical, yoneda)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
