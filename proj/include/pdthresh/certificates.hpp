#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdthresh/counterexamples.hpp"
#include "pdthresh/graph.hpp"
#include "pdthresh/matrix.hpp"
#include "pdthresh/thresholding.hpp"

namespace pdthresh {

enum class Verdict { GuaranteedForAll, NotGuaranteed };

// A self-contained answer to a preservation question.  Positive verdicts
// cite the structural reason; negative verdicts carry a machine-checked
// witness: a PD matrix plus the thresholding that destroys definiteness.
struct Certificate {
    Verdict verdict = Verdict::GuaranteedForAll;
    std::string theorem;                      // which characterization decided it
    std::vector<std::vector<int>> structure;  // components backing a positive verdict
    std::vector<std::string> notes;

    std::optional<SymmetricMatrix> witness;
    std::optional<UndirectedGraph> witness_threshold_graph;  // threshold by this graph...
    std::optional<double> witness_level;                     // ...or at this level
    std::vector<int> broken_cycle;       // vertices hosting the planted block
    std::optional<CycleParams> cycle_params;
    bool witness_is_a3 = false;
    PdReport witness_pre;   // the witness itself: positive definite
    PdReport witness_post;  // the witness after thresholding: not positive definite
};

// Is A_G PD for every PD A (any zero pattern)?  Yes iff g is a disjoint
// union of complete components; otherwise a witness built on a broken
// 3-cycle inside the completion of g.
Certificate certify_universal_preservation(const UndirectedGraph& g);

// Is A_H PD for every PD A with zero pattern inside g?  Yes iff every
// connected component of h is an induced subgraph of g; otherwise a witness
// in the pattern cone of g whose h-thresholding is indefinite.
Certificate certify_subgraph_preservation(const UndirectedGraph& g, const UndirectedGraph& h);

// Is A_H PD for every PD A with pattern inside g and *every* subgraph h of
// g?  Yes iff g is a forest; otherwise a witness plus the specific subgraph
// (g minus one cycle-closing edge) that fails.
Certificate certify_all_subgraph_preservation(const UndirectedGraph& g);

// Is the level thresholding A_eta PD for every PD A with pattern inside g?
// For connected g on >= 3 vertices: yes iff g is a tree.  Disconnected
// patterns are certified per component (components on <= 2 vertices are
// trivially safe).  The verdict is level-independent; `level` scales the
// witness when the answer is negative.  Requires level > 0.
Certificate certify_level_preservation(const UndirectedGraph& g, LevelThreshold level);

struct DdGuarantee {
    bool applies = false;  // strictly diagonally dominant with positive diagonal
    std::vector<double> row_margins;
};

// Strict diagonal dominance with a positive diagonal survives the removal
// of any set of off-diagonal entries, so every thresholding of such a
// matrix stays PD no matter the pattern.
DdGuarantee dd_guarantee(const SymmetricMatrix& m);

}  // namespace pdthresh
