#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfsurg/floer.hpp"
#include "hfsurg/rational.hpp"

namespace hfsurg {

/// Surgery framing matrix [[lambda1, lk], [lk, lambda2]]; the off-diagonal is
/// forced to the linking number of the oriented link.
struct Framing {
    int lambda1 = 0;
    int lambda2 = 0;
    int lk = 0;

    int64_t det() const {
        return static_cast<int64_t>(lambda1) * lambda2 - static_cast<int64_t>(lk) * lk;
    }
    int signature() const;
    // column action on doubled Spin^c coordinates
    std::array<int64_t, 2> col2(int which) const {
        return which == 0 ? std::array<int64_t, 2>{2 * lambda1, 2 * lk}
                          : std::array<int64_t, 2>{2 * lk, 2 * lambda2};
    }
};

struct SpinCClass {
    std::array<int64_t, 2> rep2{0, 0};  // canonical doubled representative
    bool torsion = false;
    Rational c1_sq;  // defined when torsion
};

struct ClassResult {
    SpinCClass cls;
    bool zero = true;
    bool graded = false;                           // absolute gradings available
    std::vector<Rational> tower_d;                 // d-invariants, sorted descending
    std::vector<std::pair<int, Rational>> torsion_summands;  // (order, grading)
    ModuleShape ungraded_shape;                    // for non-torsion classes
};

struct SurgeryOptions {
    int trunc = 0;          // 0 = auto
    int box2 = 0;           // doubled box radius; 0 = auto
    uint64_t seed = 1;
    int threads = 0;        // 0 = env/auto
    bool stabilize = true;  // re-run the pipeline at 2N and compare
    std::optional<std::array<int64_t, 2>> spinc_filter2;  // doubled rep
};

struct SurgeryResult {
    TwoBridgeLink link;
    Framing framing;
    int trunc_used = 0;
    int box2_used = 0;
    uint64_t seed = 0;
    std::vector<ClassResult> classes;  // sorted by representative
    std::vector<std::string> notes;
};

/// Canonical representative of the Spin^c class of s (doubled coordinates)
/// modulo the lattice spanned by the framing columns.
std::array<int64_t, 2> canonical_class_rep2(const Framing& fr, std::array<int64_t, 2> s2);

/// The full perturbed-surgery pipeline: census -> A-complexes -> perturbed
/// maps -> twisted gluing -> truncation -> per-class homology and gradings.
SurgeryResult compute_hf_minus(const TwoBridgeLink& link, int lambda1, int lambda2,
                               const SurgeryOptions& opts = {});

/// Stage access used by tests: the per-class truncated complex.
struct TruncatedClass {
    GradedComplex complex;                    // relative gradings (anchored at the rep)
    Rational grading_offset;                  // absolute = grading4/4 + offset (torsion classes)
    bool graded = false;
    std::vector<std::string> slot_labels;
    int slot_count = 0;
};

class SurgeryPipeline {
public:
    SurgeryPipeline(const TwoBridgeLink& link, int lambda1, int lambda2, const SurgeryOptions& opts);
    const Framing& framing() const { return fr_; }
    const LinkFloer& floer() const { return *lf_; }
    int trunc() const { return trunc_; }
    int box2() const { return box2_; }
    std::vector<SpinCClass> classes() const;
    TruncatedClass truncate_class(const SpinCClass& cls) const;
    ClassResult compute_class(const SpinCClass& cls) const;
    const std::vector<std::string>& notes() const { return notes_; }

private:
    struct Maps;
    void build_perturbed_maps();

    TwoBridgeLink link_;
    Framing fr_;
    SurgeryOptions opts_;
    int trunc_ = 0;
    int box2_ = 0;
    std::shared_ptr<LinkFloer> lf_;
    std::shared_ptr<Maps> maps_;
    std::vector<std::string> notes_;
};

} // namespace hfsurg
