#include "bh/report.hpp"

namespace bh {

json build_report(const MonodromyCover& cover, const std::vector<Automorphism>& gens,
                  std::size_t limit, const std::string& input_digest, int threads) {
    json j;
    j["format"] = 1;
    j["input_digest"] = input_digest;
    j["cover"] = cover_to_json(cover);

    json props;
    props["regular"] = is_regular(cover);
    props["NU"] = has_property_NU(cover);
    props["equal_ramification"] = has_equal_ramification(cover);
    props["simple"] = is_simple_cover(cover);
    j["properties"] = props;

    json total;
    total["euler_characteristic"] = euler_characteristic_total(cover);
    total["genus"] = total_genus(cover);
    j["total_space"] = total;

    json fibers = json::array();
    for (int i = 1; i <= cover.sig().branch_count; ++i) fibers.push_back(fiber_to_json(cover.fiber(i)));
    j["fibers"] = fibers;

    if (euler_characteristic_total(cover) < 0) {
        j["verdict"] = verdict_to_json(bh_verdict(cover, gens, limit, threads));
    } else {
        json v;
        v["format"] = 1;
        v["status"] = to_string(BHStatus::INCONCLUSIVE);
        v["rule"] = "none";
        v["note"] = "total space has non-negative Euler characteristic; the criteria do not apply";
        v["certificate"] = json::object();
        j["verdict"] = v;
    }
    return j;
}

} // namespace bh
