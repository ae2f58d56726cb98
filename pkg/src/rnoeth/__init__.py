"""Green's R-preorder on semigroups and on the constructions built from them.

Finite semigroups are Cayley tables; infinite ones are symbolic, with a
multiplication rule and a size-graded enumeration.  Questions that are
undecidable on infinite semigroups are answered by bounded search, and every
answer says which kind of evidence backs it.
"""
from .core import (ONE, ZERO, ConstructionError, ContractError, DomainError, Element,
                   FiniteSemigroup, MalformedTable, NotAssociative, Semigroup, SemigroupError,
                   SubsemigroupView, SymbolicSemigroup, Verdict, adjoin_identity, adjoin_zero,
                   chain_semilattice, cyclic_group, is_homomorphism, left_zero, null_semigroup,
                   validate_associativity)
from .green import (RPoset, check_against_ideals, find_ascending_chain, is_r_preserving,
                    is_regular, is_right_unitary, r_leq, r_leq_bounded, r_poset)
from .constructions import (EndoAction, SemilatticeDecomposition, brandt_extension, bruck_reilly,
                            free_product, inject_mutation, monoid_free_product, rees_matrix,
                            rees_matrix_zero, schutzenberger_product, semidirect_product,
                            strong_semilattice)
from .analysis import (check_phi_chain_lemma, phi_chain_search, rees_r_oracle_check,
                       sdp_verdict, surj_sdp_classify)
from .tableio import parse_table, read_table, write_table
from .witnesses import witness

__version__ = "0.1.0"
