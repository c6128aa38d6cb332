#include "fracreal/tfdoc.hpp"

#include <cstdio>

namespace fracreal {

using nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

namespace {

template <typename C, typename F>
std::vector<std::string> descending(const Poly<C>& p, F&& fmt) {
    std::vector<std::string> out;
    if (p.is_zero()) return {"0"};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out.push_back(fmt(*it));
    return out;
}

template <typename C, typename F>
Poly<C> ascending(const std::vector<std::string>& coeffs, F&& parse, const char* which) {
    if (coeffs.empty()) throw ValidationError(std::string("document ") + which + " has no coefficients");
    std::vector<C> out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out.push_back(parse(*it));
    return Poly<C>(std::move(out));
}

std::string affine_json_value(const BigRat& v) { return v.to_string(); }

}  // namespace

TfDocument to_document(const RatTf& tf, ordered_json meta, const EmitOptions& options) {
    TfDocument doc;
    auto fmt = [&](const BigRat& c) {
        return options.float_coefficients ? format_double(c.to_double()) : c.to_string();
    };
    doc.num = descending(tf.num, fmt);
    doc.den = descending(tf.den, fmt);
    doc.gain = tf.gain;
    if (options.include_meta) doc.meta = std::move(meta);
    return doc;
}

TfDocument to_document(const SymTf& tf, ordered_json meta) {
    TfDocument doc;
    auto fmt = [](const ParamPoly& c) { return c.to_string(); };
    doc.num = descending(tf.num, fmt);
    doc.den = descending(tf.den, fmt);
    doc.gain = tf.gain;
    doc.meta = std::move(meta);
    return doc;
}

RatTf to_rational_tf(const TfDocument& doc) {
    RatTf tf;
    auto parse = [](const std::string& s) { return BigRat::parse(s); };
    tf.num = ascending<BigRat>(doc.num, parse, "numerator");
    tf.den = ascending<BigRat>(doc.den, parse, "denominator");
    if (tf.den.is_zero()) throw ValidationError("document denominator is zero");
    tf.gain = doc.gain;
    return tf;
}

SymTf to_symbolic_tf(const TfDocument& doc) {
    SymTf tf;
    auto parse = [](const std::string& s) { return ParamPoly::parse(s); };
    tf.num = ascending<ParamPoly>(doc.num, parse, "numerator");
    tf.den = ascending<ParamPoly>(doc.den, parse, "denominator");
    if (tf.den.is_zero()) throw ValidationError("document denominator is zero");
    tf.gain = doc.gain;
    return tf;
}

ordered_json to_json(const TfDocument& doc, bool include_meta) {
    ordered_json j = ordered_json::object();
    if (include_meta && !doc.meta.is_null()) j["meta"] = doc.meta;
    j["variable"] = doc.variable;
    j["num"] = doc.num;
    j["den"] = doc.den;
    if (doc.gain) {
        ordered_json g = ordered_json::object();
        g["label"] = doc.gain->label;
        if (doc.gain->value) g["value"] = *doc.gain->value;
        j["gain"] = g;
    }
    return j;
}

TfDocument document_from_json(const ordered_json& j) {
    try {
        if (!j.is_object()) throw ValidationError("transfer-function document must be a JSON object");
        TfDocument doc;
        doc.variable = j.value("variable", std::string("s"));
        if (doc.variable != "s") throw ValidationError("document variable must be \"s\"");
        doc.num = j.at("num").get<std::vector<std::string>>();
        doc.den = j.at("den").get<std::vector<std::string>>();
        if (j.contains("gain") && !j["gain"].is_null()) {
            const auto& g = j["gain"];
            GainTag tag{g.at("label").get<std::string>(), std::nullopt};
            if (g.contains("value") && !g["value"].is_null()) tag.value = g["value"].get<double>();
            doc.gain = tag;
        }
        if (j.contains("meta")) doc.meta = j["meta"];
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed transfer-function document: ") + e.what());
    }
}

std::string emit(const TfDocument& doc, bool include_meta) { return to_json(doc, include_meta).dump(2) + "\n"; }

TfDocument parse_document(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    return document_from_json(j);
}

ordered_json ladder_to_json(const LadderNetwork& net, const std::vector<CircuitElement>& parts) {
    ordered_json elements = ordered_json::array();
    for (const auto& e : net.elements) {
        ordered_json item = ordered_json::object();
        item["label"] = e.label();
        item["role"] = e.role == Role::series_impedance ? "Z" : "Y";
        item["position"] = e.position;
        item["value"] = e.value.to_string();
        item["g"] = affine_json_value(e.value.g);
        item["h"] = affine_json_value(e.value.h);
        ordered_json components = ordered_json::array();
        bool nic = false;
        for (const auto& p : parts) {
            if (p.position != e.position) continue;
            ordered_json c = ordered_json::object();
            if (p.resistance) c["resistance_ohm"] = p.resistance->to_string();
            if (p.reactance)
                c[e.role == Role::series_impedance ? "inductance_h" : "capacitance_f"] = p.reactance->to_string();
            c["nic"] = p.nic_wrapped;
            nic = nic || p.nic_wrapped;
            components.push_back(c);
        }
        item["nic"] = nic;
        item["components"] = components;
        for (const auto& p : parts) {
            if (p.position != e.position || !p.cascade) continue;
            const auto& cp = *p.cascade;
            ordered_json c = ordered_json::object();
            auto side = [](const RatTf& tf) {
                ordered_json s = ordered_json::object();
                s["num"] = to_document(tf).num;
                s["den"] = to_document(tf).den;
                return s;
            };
            c["first"] = side(cp.first);
            c["second"] = side(cp.second);
            c["first_unstable"] = cp.first_unstable;
            c["plain_resistor"] = cp.plain_resistor;
            item["cascade"] = c;
            break;
        }
        elements.push_back(item);
    }
    ordered_json j = ordered_json::object();
    j["elements"] = elements;
    return j;
}

}  // namespace fracreal
