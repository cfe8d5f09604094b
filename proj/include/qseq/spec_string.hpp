#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "constructions.hpp"
#include "errors.hpp"
#include "sequence.hpp"

namespace qseq {

enum class Family { order8, tang_lindner, chung, dhm, shen };

inline std::string to_string(Family f) {
    switch (f) {
    case Family::order8: return "order8";
    case Family::tang_lindner: return "tl";
    case Family::chung: return "chung";
    case Family::dhm: return "dhm";
    case Family::shen: return "shen";
    }
    return "?";
}

/// A construction addressed by text, e.g. "tl:p=13:g=2:ijl=123" or "chung:variant=sc:src=dhm:p=5:g=2:ijl=012".
struct ConstructionSpec {
    Family family = Family::order8;
    std::uint64_t p = 0;
    std::optional<std::uint64_t> generator;
    std::optional<Triple> indices;
    PairingVariant variant = PairingVariant::shift_complement;
    ZeroPlacement zero = ZeroPlacement::zero_symbol;
    std::shared_ptr<const ConstructionSpec> source;  // chung only
    std::optional<std::string> literal_source;       // chung only: explicit binary string
};

inline constexpr const char* spec_grammar =
    "order8:p=<prime>[:g=<root>]\n"
    "tl:p=<prime>[:g=<root>]:ijl=<3 digits>[:zero=c1]\n"
    "dhm:p=<prime>[:g=<root>]:ijl=<3 digits>\n"
    "shen:p=<prime>[:g=<root>]:ijl=<3 digits>\n"
    "chung:variant=so|sc:src=<spec or binary string>";

namespace detail {

inline std::uint64_t parse_uint(std::string_view key, std::string_view v) {
    if (v.empty() || v.size() > 18) throw ParameterError("bad value for " + std::string(key));
    std::uint64_t out = 0;
    for (char c : v) {
        if (c < '0' || c > '9') throw ParameterError("bad value for " + std::string(key) + ": " + std::string(v));
        out = out * 10 + static_cast<unsigned>(c - '0');
    }
    return out;
}

inline Triple parse_triple(std::string_view v) {
    if (v.size() != 3) throw ParameterError("ijl needs three digits");
    Triple t;
    unsigned* slots[3] = {&t.i, &t.j, &t.l};
    for (int k = 0; k < 3; ++k) {
        if (v[k] < '0' || v[k] > '3') throw ParameterError("ijl digits must be 0..3");
        *slots[k] = static_cast<unsigned>(v[k] - '0');
    }
    return t;
}

}  // namespace detail

inline ConstructionSpec parse_spec(std::string_view text) {
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    ConstructionSpec spec;
    if (head == "order8") spec.family = Family::order8;
    else if (head == "tl") spec.family = Family::tang_lindner;
    else if (head == "chung") spec.family = Family::chung;
    else if (head == "dhm") spec.family = Family::dhm;
    else if (head == "shen") spec.family = Family::shen;
    else throw ParameterError("unknown family '" + std::string(head) + "'");

    bool have_p = false, have_variant = false;
    auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    while (!rest.empty()) {
        const auto eq = rest.find('=');
        if (eq == std::string_view::npos) throw ParameterError("expected key=value in '" + std::string(rest) + "'");
        const auto key = rest.substr(0, eq);
        if (key == "src") {
            if (spec.family != Family::chung) throw ParameterError("src is only valid for chung");
            const auto v = rest.substr(eq + 1);
            if (!v.empty() && v.find_first_not_of("01") == std::string_view::npos)
                spec.literal_source = std::string(v);
            else
                spec.source = std::make_shared<const ConstructionSpec>(parse_spec(v));
            rest = {};
            break;
        }
        const auto end = rest.find(':', eq);
        const auto value = rest.substr(eq + 1, end == std::string_view::npos ? std::string_view::npos : end - eq - 1);
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end + 1);

        if (key == "p") {
            spec.p = detail::parse_uint(key, value);
            have_p = true;
        } else if (key == "g") {
            spec.generator = detail::parse_uint(key, value);
        } else if (key == "ijl") {
            spec.indices = detail::parse_triple(value);
        } else if (key == "variant") {
            if (value == "so") spec.variant = PairingVariant::shift_only;
            else if (value == "sc") spec.variant = PairingVariant::shift_complement;
            else throw ParameterError("variant must be so or sc");
            have_variant = true;
        } else if (key == "zero") {
            if (value != "c1") throw ParameterError("zero must be c1");
            spec.zero = ZeroPlacement::in_c1;
        } else {
            throw ParameterError("unknown key '" + std::string(key) + "'");
        }
    }

    if (spec.family == Family::chung) {
        if (!have_variant) throw ParameterError("chung needs variant=so|sc");
        if (!spec.source && !spec.literal_source) throw ParameterError("chung needs src=...");
        return spec;
    }
    if (!have_p) throw ParameterError(to_string(spec.family) + " needs p=");
    if (spec.family != Family::order8 && !spec.indices) throw ParameterError(to_string(spec.family) + " needs ijl=");
    return spec;
}

/// Canonical text form; includes the generator only when one was given or resolved.
inline std::string to_string(const ConstructionSpec& s) {
    std::string out = to_string(s.family);
    if (s.family == Family::chung) {
        out += ":variant=" + to_string(s.variant) + ":src=";
        out += s.literal_source ? *s.literal_source : to_string(*s.source);
        return out;
    }
    out += ":p=" + std::to_string(s.p);
    if (s.generator) out += ":g=" + std::to_string(*s.generator);
    if (s.indices) out += ":ijl=" + s.indices->to_string();
    if (s.zero == ZeroPlacement::in_c1) out += ":zero=c1";
    return out;
}

/// Fills in the default generator so the canonical form is fully explicit.
inline ConstructionSpec resolve(ConstructionSpec s) {
    if (s.family == Family::chung) {
        if (s.source) s.source = std::make_shared<const ConstructionSpec>(resolve(*s.source));
        return s;
    }
    if (!s.generator) s.generator = find_primitive_root(s.p);
    return s;
}

inline PeriodicSeq build(const ConstructionSpec& s) {
    switch (s.family) {
    case Family::order8: return build_order8(s.p, s.generator);
    case Family::tang_lindner: return build_tang_lindner(s.p, s.generator, *s.indices, s.zero);
    case Family::dhm: return build_dhm(s.p, s.generator, *s.indices);
    case Family::shen: return build_shen(s.p, s.generator, *s.indices);
    case Family::chung: {
        const auto src = s.literal_source ? PeriodicSeq::parse(*s.literal_source, Alphabet::binary) : build(*s.source);
        return chung_quaternary(src, s.variant);
    }
    }
    throw InternalError("unhandled family");
}

inline PeriodicSeq build(std::string_view text) { return build(parse_spec(text)); }

}  // namespace qseq
