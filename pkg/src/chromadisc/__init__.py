"""Exact chromatic discrepancy toolkit.

The discrepancy of a proper colouring is the largest gap, over induced
subgraphs, between the number of colours the subgraph shows and its own
chromatic number; the discrepancy of a graph is the minimum over its
proper colourings.  This package computes these quantities exactly at
small scale, produces checkable certificates for the structural
arguments that bound them, generates the extremal constructions, and
batch-verifies the known bounds over corpora.
"""

from .graphs import (Graph, Graph6Error, BallView, ball, bits,
                     connected_components, cycle_lengths_present, degeneracy,
                     enumerate_labeled_graphs, find_cycle_of_length,
                     has_cycle_of_length, induced_subgraph,
                     is_complete_multipartite, parse_edge_list, parse_graph6,
                     parse_graph6_file, subset_degeneracy, write_edge_list,
                     write_graph6)
from .coloring import (ColoringStats, ProperColoring, SubsetChi,
                       all_proper_partitions, chromatic_number, clique_number,
                       closed_palette_sizes, co_local_colourability, coloring_stats,
                       colour_subset_with_limit, enumerate_proper_partitions,
                       extract_critical_subgraph, greedy_colour_subset,
                       independent_set_frequencies, is_co_locally_s_colourable,
                       is_proper, is_r_locally_s_colourable,
                       local_chromatic_number, local_colourability, max_clique,
                       optimal_coloring, psi_optimal_coloring,
                       random_order_independent_set, subset_chromatic_number)
from .discrepancy import (DiscrepancyResult, FValueResult, RainbowSet,
                          chromatic_discrepancy,
                          chromatic_discrepancy_bruteforce,
                          discrepancy_of_coloring,
                          discrepancy_of_coloring_bruteforce, f_value,
                          min_rainbow_cover_chromatic)
from .certificates import (GuaranteeViolation, IterationRound, LocalityError,
                           RainbowISCertificate, RainbowNbhdCertificate,
                           bounded_rainbow_cover,
                           greedy_rainbow_independent_set,
                           iterative_rainbow_independent_set, pigeonhole_vertex,
                           rainbow_closed_neighbourhood)
from .constructions import (ColoredConstruction, dirac_join,
                            generalized_mycielski, mycielski_graph,
                            mycielskian, spectrum_gadget)
from .balls import (BallColoring, BipartiteCut, ForbiddenCycleError,
                    ThetaWitness, bipartite_min_degree_subgraph, colour_ball,
                    find_theta_subgraph, layer_degeneracy_report)
from .harness import (ALL_CHECKS, CONJECTURE_CHECKS, PROVEN_CHECKS, CheckSpec,
                      HuntFindings, Report, counterexample_hunt, default_jobs,
                      exhaustive_corpus, read_corpus, scan_corpus)
from .figures import render_hunt_figures, render_scan_figures

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
