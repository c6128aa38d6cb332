#include "fracreal/ladder.hpp"

#include <cstdio>
#include <sstream>

namespace fracreal {

std::string LadderElement::label() const {
    return (role == Role::series_impedance ? "Z" : "Y") + std::to_string(position);
}

LadderNetwork synthesize_ladder(const RatTf& tf) {
    const ContinuedFraction cfe = rational_to_cfe(tf);
    LadderNetwork net;
    for (std::size_t i = 0; i < cfe.quotients.size(); ++i) {
        const Role role = i % 2 == 0 ? Role::series_impedance : Role::shunt_admittance;
        net.elements.push_back(LadderElement{role, i + 1, cfe.quotients[i]});
    }
    return net;
}

RatTf ladder_to_tf(const LadderNetwork& net) {
    if (net.elements.empty()) throw ValidationError("empty ladder network");
    ContinuedFraction cfe;
    for (std::size_t i = 0; i < net.elements.size(); ++i) {
        const auto& e = net.elements[i];
        const Role expected = i % 2 == 0 ? Role::series_impedance : Role::shunt_admittance;
        if (e.role != expected) throw ValidationError("ladder roles must alternate Z, Y, Z, ... starting with Z1");
        cfe.quotients.push_back(e.value);
    }
    return cfe.reconstruct();
}

CascadePair factor_negative_admittance(const BigRat& g, const BigRat& h) {
    if (g.is_zero() && h.is_zero()) throw MathError("zero admittance");
    CascadePair out;
    const RatPoly one = RatPoly::constant(BigRat(1));
    if (h.is_zero()) {
        out.first = normalize(RatTf{one, RatPoly::constant(g), std::nullopt, 0, false});
        out.second = RatTf{one, one, std::nullopt, 0, false};
        out.plain_resistor = true;
        return out;
    }
    const RatPoly minus = RatPoly::affine(g, -h);
    const RatPoly plus = RatPoly::affine(g, h);
    // Keep the factors unreduced so their product is literally 1/(g + hs).
    out.first = RatTf{one, minus, std::nullopt, 0, false};
    out.second = RatTf{minus, plus, std::nullopt, 0, false};
    // Pole at s = g/h.
    out.first_unstable = (g / h) > BigRat(0);
    return out;
}

Affine CircuitElement::value() const {
    const BigRat sign = nic_wrapped ? BigRat(-1) : BigRat(1);
    Affine v{BigRat(0), BigRat(0)};
    if (resistance) v.g = role == Role::series_impedance ? sign * *resistance : sign / *resistance;
    if (reactance) v.h = sign * *reactance;
    return v;
}

std::vector<CircuitElement> map_elements(const LadderNetwork& net) {
    std::vector<CircuitElement> out;
    for (const auto& e : net.elements) {
        const BigRat& g = e.value.g;
        const BigRat& h = e.value.h;
        auto make = [&](bool with_g, bool with_h, bool negative) {
            CircuitElement c{e.role, e.position, std::nullopt, std::nullopt, negative, std::nullopt};
            if (with_g && !g.is_zero())
                c.resistance = e.role == Role::series_impedance ? abs(g) : BigRat(1) / abs(g);
            if (with_h && !h.is_zero()) c.reactance = abs(h);
            return c;
        };
        const bool g_negative = g.sign() < 0;
        const bool h_negative = h.sign() < 0;
        const bool mixed = !g.is_zero() && !h.is_zero() && g_negative != h_negative;
        if (mixed) {
            out.push_back(make(true, false, g_negative));
            out.push_back(make(false, true, h_negative));
        } else {
            out.push_back(make(true, true, g_negative || h_negative));
        }
        if (e.role == Role::shunt_admittance && (g_negative || h_negative) && !(g.is_zero() && h.is_zero())) {
            const CascadePair pair = factor_negative_admittance(g, h);
            for (auto it = out.end() - (mixed ? 2 : 1); it != out.end(); ++it) it->cascade = pair;
        }
    }
    return out;
}

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string num(const BigRat& v) { return num(v.to_double()); }

class NodeNamer {
public:
    std::string next() { return "n" + std::to_string(counter_++); }

private:
    int counter_ = 0;
};

// Components of one part between nodes a and b. Series parts chain R then L
// through an internal node; parallel parts place R and C across a-b.
void emit_components(std::ostringstream& os, const CircuitElement& e, const std::string& suffix, const std::string& a,
                     const std::string& b, const std::string& internal) {
    const std::string id = std::to_string(e.position) + suffix;
    if (e.role == Role::series_impedance) {
        if (e.resistance && e.reactance) {
            os << "R" << id << " " << a << " " << internal << " " << num(*e.resistance) << "\n";
            os << "L" << id << " " << internal << " " << b << " " << num(*e.reactance) << "\n";
        } else if (e.resistance) {
            os << "R" << id << " " << a << " " << b << " " << num(*e.resistance) << "\n";
        } else if (e.reactance) {
            os << "L" << id << " " << a << " " << b << " " << num(*e.reactance) << "\n";
        }
    } else {
        if (e.resistance) os << "R" << id << " " << a << " " << b << " " << num(*e.resistance) << "\n";
        if (e.reactance) os << "C" << id << " " << a << " " << b << " " << num(*e.reactance) << "\n";
    }
}

}  // namespace

std::string export_netlist(const std::vector<CircuitElement>& elements, const std::string& name,
                           const NetlistOptions& options) {
    if (elements.empty()) throw ValidationError("cannot export an empty network");

    std::ostringstream subckts;
    std::ostringstream body;
    NodeNamer nodes;
    std::string node = nodes.next();
    const std::string input = node;

    std::size_t last_position = elements.back().position;
    for (std::size_t i = 0; i < elements.size();) {
        // Parts sharing a position form one ladder element.
        std::size_t j = i;
        while (j < elements.size() && elements[j].position == elements[i].position) ++j;
        const Role role = elements[i].role;
        const bool last = elements[i].position == last_position;

        std::string far = node;
        for (std::size_t k = i; k < j; ++k) {
            const CircuitElement& e = elements[k];
            const std::string suffix = (j - i > 1) ? std::string(1, static_cast<char>('a' + (k - i))) : "";
            const std::string id = std::to_string(e.position) + suffix;
            std::string a = node;
            std::string b = "0";
            if (role == Role::series_impedance) {
                a = far;
                b = (last && k + 1 == j) ? "0" : nodes.next();
                far = b;
            }
            if (e.nic_wrapped) {
                const std::string sub = "NIC" + id;
                subckts << ".subckt " << sub << " p n\n";
                subckts << "E" << id << " out n p inm " << num(options.opamp_gain) << "\n";
                subckts << "RA" << id << " out inm " << num(options.nic_resistance) << "\n";
                subckts << "RB" << id << " inm n " << num(options.nic_resistance) << "\n";
                emit_components(subckts, e, suffix, "p", "out", "m");
                subckts << ".ends " << sub << "\n";
                body << "X" << id << " " << a << " " << b << " " << sub << "\n";
            } else {
                const std::string internal =
                    (role == Role::series_impedance && e.resistance && e.reactance) ? nodes.next() : "";
                emit_components(body, e, suffix, a, b, internal);
            }
        }
        if (role == Role::series_impedance) node = far;
        i = j;
    }

    std::ostringstream os;
    os << "* " << name << "\n";
    os << subckts.str();
    os << body.str();
    os << "Vport " << input << " 0 AC 1\n";
    return os.str();
}

}  // namespace fracreal
