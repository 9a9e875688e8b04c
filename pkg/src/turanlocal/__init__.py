"""turanlocal: verification toolkit for clique-localized spectral bounds on
weighted graphs.

The core objects are :class:`~turanlocal.graphs.WeightedGraph`, the clique
profile cl(v)/cl(e), the Jacobi spectrum, the bound catalog with slack and
equality flags, the equality certifier, and the isomorph-free small-graph
enumerator that brute-force-verifies every statement in the catalog.
"""

from .backend import backend_name
from .bounds import (BoundId, BoundInputs, BoundReport, bound_classics,
                     bound_local_edge, bound_localized_wilf, bound_main_weighted,
                     bound_vertex_degree, adak_chandran_report,
                     chromatic_lower_bounds, compute_all_bounds, property_p_check,
                     psi_report, sum_inequalities, turan_degree_report)
from .certify import (Classification, CertifyOutcome, ExtremalCertificate,
                      ExtremalKind, certify_equality, classify_unweighted_equality,
                      predicted_equality, verify_certificate)
from .cliques import CliqueProfile, clique_number, clique_profile, max_clique, maximal_cliques
from .coloring import chromatic_number
from .enumeration import (CorpusMode, RandomModel, VerificationReport,
                          canonical_form, count_classes, enumerate_graphs,
                          random_gnp, randomize_weights, verify_corpus, write_corpus)
from .graphs import (GraphParseError, Partition, StripResult, WeightedGraph,
                     complement, complete_multipartite_partition,
                     connected_components, parse_graph6, parse_graph_json,
                     parse_weighted_edgelist, strip_isolated, to_graph6,
                     to_graph_json, to_weighted_edgelist)
from .simplex import (MaximizeResult, StructureCheck, WeightScheme,
                      check_equality_structure, form_value, maximize_form,
                      scheme_matrix)
from .spectral import (EigenError, SpectrumSummary, eigen_sym, perron_vector,
                       spectral_radius, spectrum)

__version__ = "0.1.0"
