/**
 * @file two_bridge_spec.hpp
 * @brief The parameter list (a_1, ..., a_l) of a 2-bridge diagram [2a_1, ..., 2a_l].
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

/// Malformed link specification text.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Nonempty list of nonzero integers a_j; the diagram has 2|a_j| crossings in region j.
 */
struct TwoBridgeSpec {
    std::vector<long> a;

    /// Validates the invariants (nonempty, no zero entry); throws ParseError otherwise.
    explicit TwoBridgeSpec(std::vector<long> values);

    std::size_t length() const { return a.size(); }
    /// Comma-separated even crossing counts "2a_1,2a_2,...".
    std::string to_string() const;

    friend bool operator==(const TwoBridgeSpec& x, const TwoBridgeSpec& y) { return x.a == y.a; }
};

/**
 * @brief One step of the standard 2-bridge template in the sweep frame.
 *
 * The template uses four blocks (numbered 0..3 from left to right), each an
 * n-cable of one strand. `block` is the leftmost block the step acts on.
 */
struct TemplateStep {
    enum class Kind { CableCup, Projector, CableCrossing, CableCap } kind;
    int block = 0;
    int sign = 0;  // crossings only: +1 left block over, -1 left block under
};

/// Component structure of the closed template, found by tracing strands.
struct TemplateTrace {
    int components = 0;
    /// Blocks that receive a projector: one per component, at the bottom layer.
    std::vector<int> projector_blocks;
};

TemplateTrace trace_two_bridge_template(const TwoBridgeSpec& spec);

/**
 * @brief Bottom-to-top step list of the template: two cups, projectors, the twist
 *        regions (region j acts on blocks (1,2) for odd j and (2,3) for even j) and
 *        the closing caps.
 */
std::vector<TemplateStep> two_bridge_template(const TwoBridgeSpec& spec);

}  // namespace skein
