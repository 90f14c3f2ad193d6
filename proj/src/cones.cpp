#include "adjsurf/cones.hpp"

#include <stdexcept>

namespace adjsurf {

ConicRuledData::ConicRuledData(Int q_, Int e_, Int alpha_)
    : q(std::move(q_)), e(std::move(e_)), alpha(std::move(alpha_)) {
    if (q < 1) throw std::invalid_argument("conic-ruled data: q must be >= 1");
    if (genus() < 0)
        throw std::invalid_argument("conic-ruled data: sectional genus 2q - 1 + alpha - e = " +
                                    genus().str() + " is negative");
}

ConeRelations cone_relations(const ConicRuledData& data) {
    ConeRelations rel{data.degree(), data.genus()};
    if (rel.d <= 0)
        throw std::invalid_argument("cone_relations: degree 4(alpha - e) = " + rel.d.str() +
                                    " is not positive");
    if (rel.d != 4 * rel.g + 4 - 8 * data.q)
        throw std::logic_error("cone_relations: d = 4g + 4 - 8q failed");  // unreachable
    return rel;
}

bool segre_threshold(const ConicRuledData& data) {
    const ConeRelations rel = cone_relations(data);
    const bool by_degree = rel.d >= 2 * rel.g + 5;
    const bool by_split = data.alpha - data.e >= 2 * data.q + 2;
    if (by_degree != by_split)
        throw std::logic_error("segre_threshold: the two formulations disagree");  // unreachable
    return by_split;
}

SegreClassification segre_classify(const ConicRuledData& data, bool linearly_normal_sections) {
    if (!linearly_normal_sections) return {SegreOutcome::NotLinearlyNormal, std::nullopt};
    if (!segre_threshold(data)) return {SegreOutcome::BelowThreshold, std::nullopt};
    return {SegreOutcome::ConeVeronese2, data.alpha - data.e};
}

bool min_degree_meets_segre_threshold(const Int& g) {
    return 3 * g - 2 >= 2 * g + 5;
}

}  // namespace adjsurf
