"""Exact Yokonuma-Hecke algebra engine and the derived link invariants."""

__version__ = "0.1.0"

from .algebra import (Algebra, Element, Presentation, TraceParams,
                      convert_presentation, embed_braid, enumerate_normal_words,
                      idempotent_e, multiply, trace)
from .braids import (BraidWord, FramedBraid, LinkClosure, closure_components,
                     conway_triple, delete_components, exponent_sum,
                     markov_conjugate, markov_stabilize, mixed_crossing_positions)
from .esystem import ESolution, FtlCondition, esolution, ftl_params, verify_esystem, ytl_params
from .invariants import (delta, e_k_factor, gamma_framed, gamma_specialized,
                         homflypt, jones, jones_u, nu, set_partitions,
                         theta_combinatorial, theta_d_cap, theta_d_small,
                         theta_skein, theta2_combinatorial)
from .quotients import (QuotientKind, catalan, dim_ctl, dim_ftl, dim_y, dim_ytl,
                        dpartition_dim, dpartitions, factoring_check, ideal_generator,
                        is_irrep, standard_tableaux_count)
from .rings import (Cyclo, ParseError, PoleError, Poly, RatFun, cyclotomic_phi,
                    parse_expr, parse_poly, poly_substitute, root_of_unity_power)
