"""Exact counting of complete multipartite subgraph copies and
verification of the associated extremal bounds on small graphs."""

from .counting import (PartSpec, aut_order, count_copies, count_copies_complete,
                       count_copies_through, count_embeddings, multinomial)
from .formulas import (binomial, bound, convexity_report, f_formula,
                       g_formula_closed, g_formula_sum, h_formula)
from .graph import (Graph, complement, complete, construct_F, construct_G,
                    construct_H, construct_Krs_star, cycle, disjoint_union,
                    empty_graph, from_graph6, join, path, to_graph6)
from .invariants import (InvariantProfile, circumference, detour_order,
                         is_biconnected, is_connected, matching_number,
                         min_degree, profile)
from .reduction import (DisintegrationResult, closure, disintegrate,
                        saturate_circumference, saturate_matching)
from .verify import (FamilyFilter, LemmaReport, VerificationReport,
                     check_lemma, enumerate_labeled, stream_graph6,
                     verify_bound)

__version__ = "0.1.0"
