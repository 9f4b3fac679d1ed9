/**
 * @file two_bridge_spec.cpp
 * @brief Validation and template compilation for 2-bridge diagrams.
 */
#include "skein/two_bridge_spec.hpp"

#include <array>
#include <numeric>
#include <sstream>

namespace skein {

TwoBridgeSpec::TwoBridgeSpec(std::vector<long> values) : a(std::move(values)) {
    if (a.empty()) throw ParseError("2-bridge specification must be nonempty");
    for (long x : a)
        if (x == 0) throw ParseError("2-bridge specification entries must be nonzero");
}

std::string TwoBridgeSpec::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << 2 * a[i];
    return os.str();
}

TemplateTrace trace_two_bridge_template(const TwoBridgeSpec& spec) {
    // Bottom cups: strand 0 occupies blocks 0,1 and strand 1 occupies blocks 2,3.
    std::array<int, 4> at = {0, 0, 1, 1};
    for (std::size_t j = 0; j < spec.a.size(); ++j) {
        const int left = (j % 2 == 0) ? 1 : 2;
        for (long c = 0; c < 2 * std::labs(spec.a[j]); ++c) std::swap(at[left], at[left + 1]);
    }
    std::array<int, 2> parent = {0, 1};
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    auto join = [&](int x, int y) { parent[find(x)] = find(y); };
    if (spec.a.size() % 2 == 1) {
        join(at[0], at[1]);
        join(at[2], at[3]);
    } else {
        join(at[1], at[2]);
        join(at[0], at[3]);
    }
    TemplateTrace t;
    t.projector_blocks.push_back(0);
    if (find(0) != find(1)) t.projector_blocks.push_back(2);
    t.components = static_cast<int>(t.projector_blocks.size());
    return t;
}

std::vector<TemplateStep> two_bridge_template(const TwoBridgeSpec& spec) {
    using K = TemplateStep::Kind;
    std::vector<TemplateStep> steps;
    steps.push_back({K::CableCup, 0, 0});
    steps.push_back({K::CableCup, 2, 0});
    for (int b : trace_two_bridge_template(spec).projector_blocks) steps.push_back({K::Projector, b, 0});
    for (std::size_t j = 0; j < spec.a.size(); ++j) {
        const int left = (j % 2 == 0) ? 1 : 2;
        const int sign = spec.a[j] > 0 ? 1 : -1;
        for (long c = 0; c < 2 * std::labs(spec.a[j]); ++c) steps.push_back({K::CableCrossing, left, sign});
    }
    if (spec.a.size() % 2 == 1) {
        steps.push_back({K::CableCap, 2, 0});
        steps.push_back({K::CableCap, 0, 0});
    } else {
        steps.push_back({K::CableCap, 1, 0});
        steps.push_back({K::CableCap, 0, 0});
    }
    return steps;
}

}  // namespace skein
