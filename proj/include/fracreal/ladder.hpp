#pragma once

// Domino-ladder (Cauer) synthesis: Z1 + 1/(Y2 + 1/(Z3 + 1/(Y4 + ...))).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fracreal/approx.hpp"

namespace fracreal {

enum class Role { series_impedance, shunt_admittance };

struct LadderElement {
    Role role;
    std::size_t position;  // 1-based: Z1, Y2, Z3, ...
    Affine value;

    [[nodiscard]] std::string label() const;
    friend bool operator==(const LadderElement&, const LadderElement&) = default;
};

/// Roles alternate Z, Y, Z, ... starting with Z1.
struct LadderNetwork {
    std::vector<LadderElement> elements;
    friend bool operator==(const LadderNetwork&, const LadderNetwork&) = default;
};

LadderNetwork synthesize_ladder(const RatTf& tf);
RatTf ladder_to_tf(const LadderNetwork& net);

/// Z(s) = 1/(A + Bs) = [1/(A - Bs)] * [(A - Bs)/(A + Bs)].
struct CascadePair {
    RatTf first;   // 1/(A - Bs)
    RatTf second;  // (A - Bs)/(A + Bs)
    bool first_unstable = false;  // pole of 1/(A - Bs) in the right half plane
    bool plain_resistor = false;  // B == 0: the pair degenerates to (1/A, 1)
};

/// Throws MathError("zero admittance") when g == h == 0.
CascadePair factor_negative_admittance(const BigRat& g, const BigRat& h);

/// Passive realization of one sign-uniform part of an affine element.
/// For Z = g + hs: resistor |g| ohms in series with inductor |h| henries.
/// For Y = g + hs: resistor 1/|g| ohms in parallel with capacitor |h| farads.
/// A zero g or h drops that component. Negative parts are NIC-wrapped.
struct CircuitElement {
    Role role;
    std::size_t position;
    std::optional<BigRat> resistance;  // ohms
    std::optional<BigRat> reactance;   // henries (Z) or farads (Y)
    bool nic_wrapped = false;
    /// Alternative cascade realization, attached to negative admittances.
    std::optional<CascadePair> cascade;

    /// The affine value this part contributes (sign restored).
    [[nodiscard]] Affine value() const;
};

/// One CircuitElement per ladder element, or two when g and h have mixed
/// signs (for Z the parts are in series, for Y in parallel).
std::vector<CircuitElement> map_elements(const LadderNetwork& net);

struct NetlistOptions {
    double nic_resistance = 1e3;  // the two equal resistors of the converter
    double opamp_gain = 1e6;      // ideal op-amp as a VCVS
};

/// SPICE netlist of the ladder one-port between n0 and ground. Negative parts
/// become instances of a per-part NIC subcircuit (op-amp VCVS plus two equal
/// resistors, the wrapped impedance between port and op-amp output).
std::string export_netlist(const std::vector<CircuitElement>& elements, const std::string& name,
                           const NetlistOptions& options = {});

}  // namespace fracreal
