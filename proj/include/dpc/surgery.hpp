#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpc/labelling.hpp"
#include "dpc/plane_graph.hpp"

namespace dpc {

// Delete a set of internal vertices, then either identify two surviving
// vertices, insert a new arc, or stop. Identification refuses to merge
// edges or create loops; both actions need an unambiguous face slot (the
// unique face of the post-deletion graph containing both endpoints, or the
// explicit `slot_face` override).
struct SurgeryPlan {
    enum class Action { None, Identify, InsertArc };

    std::vector<int> deletions;
    Action action = Action::None;
    int a = -1, b = -1;
    Perm arc_sign;                 // InsertArc only; defaults to identity
    std::optional<int> slot_face;  // post-deletion face index override
};

struct ApplyResult {
    LabelledGraph lg;
    std::vector<int> old_to_new; // -1 for deleted; an identified pair shares an id
};

ApplyResult apply_plan(const LabelledGraph& lg, const SurgeryPlan& plan);

struct SafetyReport {
    bool condition_a = true; // U untouched: no U-identification, no new U-U edge
    bool condition_b = true; // no 9^- cycle through the new or merged element
    std::vector<int> created_short_cycle; // witness for a (b) violation
    GraphClassReport result_class;        // full classification of the result
    ApplyResult result;
};

SafetyReport check_safety(const LabelledGraph& lg, const SurgeryPlan& plan);

// Line-oriented plan format:
//   delete: v1 v2 ...
//   identify: u w      |  insert: u w [WORD]  |  none
//   slot: FACE_INDEX   (optional, 1-based post-deletion face)
SurgeryPlan parse_plan(std::istream& in, int k = 3);
SurgeryPlan parse_plan_string(const std::string& text, int k = 3);
SurgeryPlan load_plan(const std::string& path, int k = 3);

} // namespace dpc
