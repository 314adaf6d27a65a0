"""Exact enumeration of proper vertex partitions of graphs.

The profile of a graph G is the vector of counts of partitions of V(G)
into exactly k independent blocks; its total is the graph's Bell number.
This package provides:

* gstir.exact     -- big-integer Stirling/Bell/binomial primitives
* gstir.graphs    -- graph constructions and the graph-spec grammar
* gstir.oracle    -- brute-force profile / polynomial / coloring engine
* gstir.formulas  -- closed forms for the constructed families
* gstir.sequences -- OEIS-aligned sequence and triangle generators
* gstir.verify    -- formula / oracle / published-table cross-checks
* gstir.cli       -- the `gstir` command-line tool
"""

from .exact import (InexactDivision, bell, binomial, exact_div,
                    falling_factorial, fibonacci, lucas, stirling2)
from .formulas import (MultipartiteSpec, OutOfDomain, km_bell, km_stirling,
                       knn_stirling4, knn_stirling5, knnn_stirling5,
                       multipartite_bell, multipartite_stirling,
                       myc_star_bell, myc_star_stirling3,
                       myc_star_stirling_2n)
from .graphs import (Graph, InvalidSize, NotATree, ParseError,
                     bipartite_minus_matching, complement,
                     complete_multipartite, cycle, edgeless, mycielskian,
                     parse_graph_spec, path, realize, render_graph_spec,
                     star, tree_from_parents)
from .oracle import (CountProfile, Polynomial, TooLarge, bell_of,
                     chromatic_polynomial, nonadjacent_pair_count,
                     partition_polynomial, proper_coloring_count,
                     stirling_profile)
from .sequences import (NonMonotoneIndex, NotALinearSequence, NotATriangle,
                        TriangleRow, bfile_text, sequence_values,
                        triangle_row, write_bfile)

__version__ = "0.1.0"
