#ifndef DEGEMBED_ORACLE_HPP
#define DEGEMBED_ORACLE_HPP

#include <utility>
#include <vector>

#include "degembed/graph.hpp"
#include "degembed/sequences.hpp"

namespace degembed {

/// Search outcomes. Timeout is never conflated with Absent: a negative answer
/// is only reported after a completed exhaustive search.
enum class SearchStatus { Found, Absent, Timeout };

const char* to_string(SearchStatus s);

struct EmbedResult {
    SearchStatus status = SearchStatus::Timeout;
    EmbeddingMap map;      // meaningful iff status == Found
    long long nodes = 0;   // search nodes visited

    bool found() const { return status == SearchStatus::Found; }
};

/// Exact subgraph-embedding search: an injective map of pattern vertices into
/// host vertices preserving every pattern edge, or a proof that none exists
/// within the node budget. Component-by-component with most-constrained
/// ordering; host candidates tried by ascending residual degree; repeated
/// isomorphic components are searched once up to order.
EmbedResult embed_backtracking(const SimpleGraph& pattern, const SimpleGraph& host,
                               long long node_budget = 10'000'000);

/// Same search with fixed pre-assignments (pattern vertex -> host vertex).
/// Symmetry pruning is disabled so the search stays complete under pins.
EmbedResult embed_backtracking_pinned(const SimpleGraph& pattern, const SimpleGraph& host,
                                      const std::vector<std::pair<int, int>>& pins,
                                      long long node_budget = 10'000'000);

/// Labeled realizations of a degree sequence, deduplicated up to isomorphism.
struct RealizationEnumeration {
    std::vector<SimpleGraph> patterns;  // pairwise non-isomorphic
    bool complete = false;              // enumeration finished within its budgets
    long long nodes = 0;
};

RealizationEnumeration enumerate_realizations(const DegreeSequence& seq, int max_patterns = 20000,
                                              long long node_budget = 10'000'000);

struct SequenceEmbedResult {
    SearchStatus status = SearchStatus::Timeout;
    EmbeddingMap map;
    SimpleGraph realization;  // the realization that embeds, iff Found
    long long nodes = 0;
};

/// Does any realization of the sequence embed into the host? Enumerates
/// realizations up to isomorphism and runs the exact search on each.
/// Practical when the sequence is short or highly structured.
SequenceEmbedResult embed_sequence(const DegreeSequence& seq, const SimpleGraph& host,
                                   long long node_budget = 10'000'000, int max_patterns = 20000);

/// True iff every degree is odd and the host has an odd-sized connected
/// component. Every realization of an all-odd sequence has only even
/// components, so a spanning embedding into such a host is impossible.
bool parity_obstruction(const DegreeSequence& seq, const SimpleGraph& host);

/// One edge toggle: (u, v) plus whether the edge was added (true) or removed.
struct EdgeEdit {
    int u = 0, v = 0;
    bool added = false;
};

struct EditSearchResult {
    SearchStatus status = SearchStatus::Timeout;
    SimpleGraph edited_host;
    std::vector<EdgeEdit> edits;
    EmbeddingMap map;
    SimpleGraph realization;
};

/// Smallest edit set (edge toggles, tried in increasing size) after which the
/// sequence embeds into the host. Exhaustive and therefore desk-scale only:
/// requires v(host) <= 14 and edit_budget <= 2 (BudgetExceededError otherwise).
/// q is validated but does not restrict the search.
EditSearchResult embed_with_edits(const SimpleGraph& host, const DegreeSequence& seq, int q,
                                  int edit_budget, long long node_budget = 10'000'000);

}  // namespace degembed

#endif  // DEGEMBED_ORACLE_HPP
