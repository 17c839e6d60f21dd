#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linecast/ktree.hpp"

namespace linecast {

struct Call {
    VertexRef source;
    VertexRef dest;
    std::vector<Edge> path; // traversal order, source side first
    int cost = 0;           // number of edges
};

Call make_call(const CompleteKTree& tree, VertexId src, VertexId dst);

struct Step {
    int t = 0;
    std::vector<Call> calls;
};

enum class DeviationKind { ExtraStep, CostSlack };

struct Deviation {
    DeviationKind kind = DeviationKind::ExtraStep;
    std::string code;
    std::string detail;
};

std::string deviation_text(const Deviation& d);

// Dense membership set over the vertices of one tree.
class InformedSet {
public:
    explicit InformedSet(std::int64_t n) : bits_(static_cast<std::size_t>(n + 1), 0) {}
    bool contains(VertexId v) const { return bits_[static_cast<std::size_t>(v)] != 0; }
    void insert(VertexId v) {
        auto& b = bits_[static_cast<std::size_t>(v)];
        if (!b) { b = 1; ++count_; }
    }
    std::int64_t count() const { return count_; }
    const std::vector<char>& bits() const { return bits_; }

private:
    std::vector<char> bits_;
    std::int64_t count_ = 0;
};

class Schedule {
public:
    Schedule(CompleteKTree tree, VertexRef originator, std::string algorithm_tag = "");

    const CompleteKTree& tree() const { return tree_; }
    const VertexRef& originator() const { return originator_; }
    const std::vector<Step>& steps() const { return steps_; }
    const std::string& algorithm_tag() const { return tag_; }
    void set_algorithm_tag(std::string tag) { tag_ = std::move(tag); }

    Schedule& append_step(std::vector<Call> calls);
    // Adds calls at absolute time t, creating empty steps as needed.
    void add_calls(int t, std::vector<Call> calls);

    const std::vector<Deviation>& deviations() const { return deviations_; }
    void add_deviation(Deviation d) { deviations_.push_back(std::move(d)); }

    // Vertices that must be informed at the end. Empty means every vertex.
    const std::vector<VertexId>& coverage_target() const { return coverage_; }
    void set_coverage_target(std::vector<VertexId> v) { coverage_ = std::move(v); }

private:
    CompleteKTree tree_;
    VertexRef originator_;
    std::vector<Step> steps_;
    std::string tag_;
    std::vector<Deviation> deviations_;
    std::vector<VertexId> coverage_;
};

enum class ViolationKind {
    EdgeConflict,
    UninformedSource,
    DoubleReceive,
    MultiSend,
    IncompleteCoverage,
    TimeBudgetExceeded,
    MalformedCall,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    int step = 0; // 0 for global checks
    ViolationKind kind = ViolationKind::EdgeConflict;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::vector<std::pair<int, std::int64_t>> informed_timeline; // (t, informed count after t)

    bool has(ViolationKind kind) const;
};

ValidationReport validate(const Schedule& s, std::optional<int> time_budget = std::nullopt);

std::int64_t total_cost(const Schedule& s);
int total_time(const Schedule& s); // index of the last non-empty step
std::vector<VertexId> informed_after(const Schedule& s, int t);
InformedSet informed_set_after(const Schedule& s, int t);

} // namespace linecast
