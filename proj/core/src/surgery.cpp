#include "hfsurg/surgery.hpp"

namespace hfsurg {

int Framing::signature() const { return 0; }  // placeholder
struct SurgeryPipeline::Maps {};
SurgeryPipeline::SurgeryPipeline(const TwoBridgeLink&, int, int, const SurgeryOptions&) {
    throw invariant_error("surgery pipeline not built yet");
}
std::vector<SpinCClass> SurgeryPipeline::classes() const { return {}; }
TruncatedClass SurgeryPipeline::truncate_class(const SpinCClass&) const { return {}; }
ClassResult SurgeryPipeline::compute_class(const SpinCClass&) const { return {}; }
void SurgeryPipeline::build_perturbed_maps() {}
std::array<int64_t, 2> canonical_class_rep2(const Framing&, std::array<int64_t, 2> s2) { return s2; }
SurgeryResult compute_hf_minus(const TwoBridgeLink&, int, int, const SurgeryOptions&) {
    throw invariant_error("not implemented");
}

} // namespace hfsurg
