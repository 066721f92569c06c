#include "dp5/serialization.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace dp5 {

Basis parse_basis(const std::string& s) {
    std::string t;
    for (char ch : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t == "standard") return Basis::Standard;
    if (t == "curve") return Basis::Curve;
    throw std::invalid_argument("unknown basis: " + s);
}

std::string basis_name(Basis b) { return b == Basis::Standard ? "standard" : "curve"; }

namespace {

json coeff_json(const Rational& r) {
    if (is_integral(r)) {
        const Integer z = numer(r);
        if (z >= std::numeric_limits<long>::min() && z <= std::numeric_limits<long>::max()) return to_long(z);
    }
    return to_string(r);
}

Rational coeff_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError(0, field, e.what());
        }
    }
    throw ParseError(0, field, "expected an integer or a \"p/q\" string");
}

template <class T>
json class_json_impl(const ClassVec<T>& d, Basis basis, ConfigId id) {
    const auto& cfg = configuration(id);
    std::array<T, 5> v = basis == Basis::Curve ? to_curve_basis(d, cfg) : d.c;
    json coeffs = json::array();
    for (const auto& x : v) coeffs.push_back(coeff_json(Rational(x)));
    return {{"coeffs", coeffs}, {"basis", basis_name(basis)}, {"config", config_name(id)}};
}

}  // namespace

json class_to_json(const DivisorClass& d, Basis basis, ConfigId cfg) { return class_json_impl(d, basis, cfg); }
json class_to_json(const QDivisorClass& d, Basis basis, ConfigId cfg) { return class_json_impl(d, basis, cfg); }

TaggedClass class_from_json(const json& j, Basis default_basis, ConfigId default_cfg, const std::string& field) {
    TaggedClass t{{}, default_basis, default_cfg};
    try {
        if (j.is_string()) {
            t.cls = parse_qclass(j.get<std::string>(), t.basis, configuration(t.cfg));
            return t;
        }
        if (!j.is_object()) throw ParseError(0, field, "expected a class object or literal");
        if (j.contains("basis")) {
            if (!j["basis"].is_string()) throw ParseError(0, field + ".basis", "expected a string");
            t.basis = parse_basis(j["basis"].get<std::string>());
        }
        if (j.contains("config")) {
            if (!j["config"].is_string()) throw ParseError(0, field + ".config", "expected a string");
            t.cfg = parse_config(j["config"].get<std::string>());
        }
        if (!j.contains("coeffs")) throw ParseError(0, field + ".coeffs", "missing");
        const auto& c = j["coeffs"];
        if (!c.is_array() || c.size() != 5) throw ParseError(0, field + ".coeffs", "expected an array of 5 coefficients");
        std::array<Rational, 5> v;
        for (std::size_t i = 0; i < 5; ++i) v[i] = coeff_from_json(c[i], field + ".coeffs");
        const auto& cfg = configuration(t.cfg);
        t.cls = t.basis == Basis::Curve ? from_curve_basis(v, cfg) : QDivisorClass(v);
        return t;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(0, field, e.what());
    }
}

DivisorClass integral_class_from_json(const json& j, Basis default_basis, ConfigId default_cfg, const std::string& field) {
    auto t = class_from_json(j, default_basis, default_cfg, field);
    try {
        return to_integral(t.cls);
    } catch (const std::exception&) {
        throw ParseError(0, field, "expected an integral class");
    }
}

json row_to_json(const SolutionRow& r) {
    return {{"z", r.z}, {"L_sq", r.l_sq}, {"L_dot_E", r.l_dot_e}, {"E_sq", r.e_sq}, {"E_dot_Z", r.e_dot_z}};
}

SolutionRow row_from_json(const json& j) {
    SolutionRow r;
    auto num = [&](const char* key) {
        if (!j.contains(key) || !j[key].is_number_integer()) throw ParseError(0, key, "expected an integer");
        return j[key].get<long>();
    };
    if (!j.is_object()) throw ParseError(0, "row", "expected an object");
    if (!j.contains("z") || !j["z"].is_array()) throw ParseError(0, "z", "expected an array");
    for (const auto& v : j["z"]) {
        if (!v.is_number_integer()) throw ParseError(0, "z", "expected integers");
        r.z.push_back(v.get<long>());
    }
    r.l_sq = num("L_sq");
    r.l_dot_e = num("L_dot_E");
    r.e_sq = num("E_sq");
    r.e_dot_z = num("E_dot_Z");
    return r;
}

json bidouble_to_json(const BidoubleData& b, const std::string& name) {
    json j{{"kind", "bidouble"}, {"config", config_name(b.cfg)}};
    if (!name.empty()) j["name"] = name;
    for (int i = 0; i < 3; ++i) {
        json arr = json::array();
        for (const auto& c : b.d[i]) arr.push_back(class_to_json(c, Basis::Standard, b.cfg));
        j["D" + std::to_string(i + 1)] = arr;
    }
    return j;
}

namespace {

int line_of_byte(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

/// Line of the first occurrence of the last key in a dotted field path.
int line_of_field(const std::string& text, const std::string& field) {
    if (field.empty()) return 0;
    auto dot = field.find_last_of('.');
    std::string key = dot == std::string::npos ? field : field.substr(dot + 1);
    auto pos = text.find("\"" + key + "\"");
    if (pos != std::string::npos) return line_of_byte(text, pos);
    return dot == std::string::npos ? 0 : line_of_field(text, field.substr(0, dot));
}

Rational rational_field(const json& j, const std::string& key) { return coeff_from_json(j.at(key), key); }

Integer integer_field(const json& j, const std::string& key) {
    auto r = coeff_from_json(j.at(key), key);
    if (!is_integral(r)) throw ParseError(0, key, "expected an integer");
    return numer(r);
}

std::string string_field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError(0, key, "missing");
    if (!j[key].is_string()) throw ParseError(0, key, "expected a string");
    return j[key].get<std::string>();
}

ConfigId config_field(const json& j, const std::string& key) {
    try {
        return parse_config(string_field(j, key));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, key, e.what());
    }
}

Basis basis_field(const json& j, const std::string& key) {
    try {
        return parse_basis(string_field(j, key));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, key, e.what());
    }
}

void parse_double_cover(const json& j, Scenario& s) {
    DoubleCoverScenario base;
    base.name = s.name;
    if (j.contains("chi_base")) base.chi_base = integer_field(j, "chi_base");
    if (j.contains("k_sq")) base.k_sq = rational_field(j, "k_sq");
    if (j.contains("pg_bound_class")) {
        const auto& pc = j["pg_bound_class"];
        Basis basis = Basis::Curve;
        ConfigId id = ConfigId::General;
        if (pc.is_string()) {
            if (j.contains("pg_bound_basis")) basis = basis_field(j, "pg_bound_basis");
            if (j.contains("pg_bound_config")) id = config_field(j, "pg_bound_config");
        }
        auto t = class_from_json(pc, basis, id, "pg_bound_class");
        base.pg_bound_class = BoundClass{integral_class_from_json(pc, basis, id, "pg_bound_class"), t.cfg};
    }
    int sources = j.contains("m_dot_k") + j.contains("m_class") + j.contains("branch");
    if (sources > 1) throw ParseError(0, "branch", "give only one of m_dot_k/m_sq, m_class, branch");
    auto finish = [&](DoubleCoverScenario c) {
        c.name = base.name;
        c.k_sq = base.k_sq;
        c.pg_bound_class = base.pg_bound_class;
        if (j.contains("k_plus_m_sq")) c.k_plus_m_sq = rational_field(j, "k_plus_m_sq");
        s.covers.push_back(std::move(c));
    };
    if (j.contains("m_class")) {
        auto m = class_from_json(j["m_class"], Basis::Standard, ConfigId::General, "m_class");
        finish(DoubleCoverScenario::from_sigma_class(base.chi_base, m.cls));
    } else if (j.contains("branch")) {
        const auto& b = j["branch"];
        if (!b.is_object()) throw ParseError(0, "branch", "expected an object");
        if (!b.contains("d_dot_k")) throw ParseError(0, "branch.d_dot_k", "missing");
        if (!b.contains("d_sq")) throw ParseError(0, "branch.d_sq", "missing");
        Rational dk = coeff_from_json(b["d_dot_k"], "branch.d_dot_k");
        if (b["d_sq"].is_array()) {
            if (b["d_sq"].empty()) throw ParseError(0, "branch.d_sq", "empty family");
            for (const auto& v : b["d_sq"])
                finish(DoubleCoverScenario::from_branch(base.chi_base, dk, coeff_from_json(v, "branch.d_sq")));
        } else {
            finish(DoubleCoverScenario::from_branch(base.chi_base, dk, coeff_from_json(b["d_sq"], "branch.d_sq")));
        }
    } else {
        DoubleCoverScenario c = base;
        if (j.contains("m_dot_k")) c.m_dot_k = rational_field(j, "m_dot_k");
        if (j.contains("m_sq")) c.m_sq = rational_field(j, "m_sq");
        finish(c);
    }
}

void parse_bidouble(const json& j, Scenario& s) {
    BidoubleData b;
    if (j.contains("config")) b.cfg = config_field(j, "config");
    Basis basis = j.contains("basis") ? basis_field(j, "basis") : Basis::Standard;
    for (int i = 0; i < 3; ++i) {
        const std::string key = "D" + std::to_string(i + 1);
        if (!j.contains(key)) throw ParseError(0, key, "missing");
        if (!j[key].is_array()) throw ParseError(0, key, "expected an array of classes");
        for (const auto& c : j[key]) b.d[i].push_back(integral_class_from_json(c, basis, b.cfg, key));
    }
    s.bidouble = b;
}

void parse_table(const json& j, Scenario& s) {
    try {
        s.table = parse_table_case(string_field(j, "case"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, "case", e.what());
    }
    if (j.contains("printed")) s.printed_path = string_field(j, "printed");
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(line_of_byte(text, e.byte), "", e.what());
    }
    try {
        if (!j.is_object()) throw ParseError(1, "", "scenario must be a JSON object");
        Scenario s;
        s.kind = string_field(j, "kind");
        if (j.contains("name")) s.name = string_field(j, "name");
        if (j.contains("expect")) s.expect = j["expect"];
        if (s.kind == "double_cover")
            parse_double_cover(j, s);
        else if (s.kind == "bidouble")
            parse_bidouble(j, s);
        else if (s.kind == "constraint_table")
            parse_table(j, s);
        else
            throw ParseError(0, "kind", "unknown kind '" + s.kind + "'");
        return s;
    } catch (const ParseError& e) {
        if (e.line != 0) throw;
        std::string msg = e.what();
        msg = msg.substr(msg.find(": ") + 2);
        throw ParseError(line_of_field(text, e.field), e.field, msg);
    } catch (const json::exception& e) {
        throw ParseError(0, "", e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, "", e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string data_path(const std::string& relative) { return std::string(DP5_DATA_DIR) + "/" + relative; }

}  // namespace dp5
