#include "powlab/report_io.hpp"

#include <charconv>
#include <sstream>

namespace powlab {

std::string double_repr(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
    const bool needs_quote = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

std::string param_value_str(const ParamValue& v) {
    if (const auto* n = std::get_if<Natural>(&v)) return to_decimal(*n);
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    if (const auto* k = std::get_if<PoweredThreshold>(&v)) return k->str();
    return double_repr(std::get<double>(v));
}

std::string params_compact(const ParamList& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out += ';';
        out += params[i].first;
        out += '=';
        out += param_value_str(params[i].second);
    }
    return out;
}

namespace {

OrderedJson param_value_json(const ParamValue& v) {
    if (const auto* n = std::get_if<Natural>(&v)) return to_decimal(*n);
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    if (const auto* k = std::get_if<PoweredThreshold>(&v)) return k->str();
    return std::get<double>(v);
}

OrderedJson interval_json(const Interval& iv) {
    OrderedJson j;
    j["x"] = to_decimal(iv.x);
    j["y"] = to_decimal(iv.y);
    return j;
}

}  // namespace

OrderedJson report_to_json(const CountReport& r) {
    OrderedJson j;
    j["interval"] = interval_json(r.interval);
    OrderedJson params;
    for (const auto& [name, value] : r.params) params[name] = param_value_json(value);
    j["params"] = std::move(params);
    j["count"] = to_decimal(r.count);
    j["bound_form"] = r.bound_form;
    j["bound_value"] = r.bound_value ? OrderedJson(*r.bound_value) : OrderedJson(nullptr);
    j["ratio"] = r.ratio ? OrderedJson(*r.ratio) : OrderedJson(nullptr);
    return j;
}

CountReport report_from_json(const OrderedJson& j) {
    CountReport r;
    r.interval.x = parse_natural(j.at("interval").at("x").get<std::string>());
    r.interval.y = parse_natural(j.at("interval").at("y").get<std::string>());
    for (const auto& [name, value] : j.at("params").items()) {
        if (value.is_string()) {
            const auto text = value.get<std::string>();
            if (text.find('/') != std::string::npos) {
                if (name == "k")
                    r.params.emplace_back(name, PoweredThreshold::parse(text));
                else
                    r.params.emplace_back(name, Rational::parse(text));
            } else {
                r.params.emplace_back(name, parse_natural(text));
            }
        } else {
            r.params.emplace_back(name, value.get<double>());
        }
    }
    r.count = parse_natural(j.at("count").get<std::string>());
    r.bound_form = j.at("bound_form").get<std::string>();
    if (!j.at("bound_value").is_null()) r.bound_value = j.at("bound_value").get<double>();
    if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
    return r;
}

const char* const kCountReportCsvHeader = "x,y,params,count,bound_form,bound_value,ratio";

std::string report_csv_row(const CountReport& r) {
    std::string row;
    row += csv_escape(to_decimal(r.interval.x));
    row += ',';
    row += csv_escape(to_decimal(r.interval.y));
    row += ',';
    row += csv_escape(params_compact(r.params));
    row += ',';
    row += csv_escape(to_decimal(r.count));
    row += ',';
    row += csv_escape(r.bound_form);
    row += ',';
    row += csv_escape(r.bound_value ? double_repr(*r.bound_value) : std::string());
    row += ',';
    row += csv_escape(r.ratio ? double_repr(*r.ratio) : std::string());
    return row;
}

std::string report_csv_table(const std::vector<CountReport>& reports) {
    std::string out = kCountReportCsvHeader;
    out += '\n';
    for (const auto& r : reports) {
        out += report_csv_row(r);
        out += '\n';
    }
    return out;
}

OrderedJson factorization_to_json(const Natural& n, const Factorization& f) {
    OrderedJson j;
    j["n"] = to_decimal(n);
    OrderedJson factors = OrderedJson::array();
    for (const auto& e : f.entries()) {
        OrderedJson entry;
        entry["p"] = to_decimal(e.prime);
        entry["e"] = e.exponent;
        factors.push_back(std::move(entry));
    }
    j["factors"] = std::move(factors);
    return j;
}

OrderedJson values_to_json(const Interval& iv, const std::vector<Natural>& values) {
    OrderedJson j;
    j["interval"] = interval_json(iv);
    j["count"] = std::to_string(values.size());
    OrderedJson list = OrderedJson::array();
    for (const auto& v : values) list.push_back(to_decimal(v));
    j["values"] = std::move(list);
    return j;
}

OrderedJson decomposition_to_json(const CaseDecomposition& d) {
    OrderedJson j;
    j["n"] = to_decimal(d.n);
    j["a"] = to_decimal(d.a);
    j["b"] = to_decimal(d.b);
    j["a1"] = to_decimal(d.a1);
    j["a2"] = to_decimal(d.a2);
    j["b1"] = to_decimal(d.b1);
    j["b2"] = to_decimal(d.b2);
    j["label"] = case_label_name(d.label);
    return j;
}

OrderedJson histogram_to_json(const CaseHistogram& h, const PoweredThreshold& k) {
    OrderedJson j;
    j["interval"] = interval_json(h.interval);
    j["k"] = k.str();
    j["z"] = to_decimal(h.z);
    OrderedJson counts;
    for (const auto label : {CaseLabel::case1, CaseLabel::case2, CaseLabel::case3a,
                             CaseLabel::case3b, CaseLabel::none})
        counts[case_label_name(label)] = to_decimal(h.counts[static_cast<std::size_t>(label)]);
    j["counts"] = std::move(counts);
    j["k_powered_total"] = to_decimal(h.k_powered_total);
    return j;
}

OrderedJson counterexamples_to_json(const Interval& iv, const PoweredThreshold& k,
                                    const Natural& z, const std::vector<Natural>& bad) {
    OrderedJson j;
    j["interval"] = interval_json(iv);
    j["k"] = k.str();
    j["z"] = to_decimal(z);
    OrderedJson list = OrderedJson::array();
    for (const auto& n : bad) list.push_back(to_decimal(n));
    j["counterexamples"] = std::move(list);
    return j;
}

OrderedJson identity_to_json(const Natural& n, const Natural& d, const IdentityCheck& c) {
    OrderedJson j;
    j["n"] = to_decimal(n);
    j["d"] = to_decimal(d);
    j["lhs1"] = c.lhs1.str();
    j["lhs2"] = c.lhs2.str();
    j["rhs"] = c.rhs.str();
    j["holds"] = c.holds;
    return j;
}

OrderedJson triple_to_json(const AbcTriple& t) {
    OrderedJson j;
    j["n"] = to_decimal(t.n);
    j["d"] = to_decimal(t.d);
    j["t"] = to_decimal(t.t);
    j["n_red"] = to_decimal(t.n_red);
    j["d_red"] = to_decimal(t.d_red);
    j["D"] = to_decimal(t.D);
    j["e2"] = t.e2;
    j["e3"] = t.e3;
    j["a"] = to_decimal(t.a);
    j["b"] = to_decimal(t.b);
    j["c"] = to_decimal(t.c);
    j["quality"] = t.quality;
    return j;
}

OrderedJson violations_to_json(std::uint64_t n_max, const std::vector<DViolation>& violations) {
    OrderedJson j;
    j["n_max"] = n_max;
    OrderedJson list = OrderedJson::array();
    for (const auto& v : violations) {
        OrderedJson item;
        item["n_red"] = v.n_red;
        item["d_red"] = v.d_red;
        item["reason"] = v.reason;
        list.push_back(std::move(item));
    }
    j["violations"] = std::move(list);
    return j;
}

OrderedJson witnesses_to_json(const Interval& iv, const std::string& predicate, std::size_t L,
                              const std::vector<APWitness>& ws) {
    OrderedJson j;
    j["interval"] = interval_json(iv);
    j["predicate"] = predicate;
    j["L"] = L;
    OrderedJson list = OrderedJson::array();
    for (const auto& w : ws) {
        OrderedJson item;
        item["start"] = to_decimal(w.start);
        item["d"] = to_decimal(w.d);
        item["length"] = w.length;
        OrderedJson terms = OrderedJson::array();
        for (const auto& t : w.terms) terms.push_back(to_decimal(t));
        item["terms"] = std::move(terms);
        list.push_back(std::move(item));
    }
    j["witnesses"] = std::move(list);
    return j;
}

OrderedJson apfree_to_json(const APFreeResult& r) {
    OrderedJson j;
    j["N"] = r.N;
    j["k"] = r.k;
    j["size"] = r.size;
    j["method"] = r.method;
    OrderedJson witness = OrderedJson::array();
    for (const auto v : r.witness) witness.push_back(v);
    j["witness"] = std::move(witness);
    return j;
}

OrderedJson bound_to_json(const std::string& form, double n,
                          const std::map<std::string, double>& constants, double value) {
    OrderedJson j;
    j["form"] = form;
    j["N"] = n;
    OrderedJson consts;
    for (const auto& [name, v] : constants) consts[name] = v;
    j["constants"] = std::move(consts);
    j["value"] = value;
    return j;
}

std::string values_csv(const std::vector<Natural>& values) {
    std::string out = "n\n";
    for (const auto& v : values) {
        out += to_decimal(v);
        out += '\n';
    }
    return out;
}

std::string witnesses_csv(const std::vector<APWitness>& ws) {
    std::string out = "start,d,length,terms\n";
    for (const auto& w : ws) {
        std::string terms;
        for (std::size_t i = 0; i < w.terms.size(); ++i) {
            if (i > 0) terms += ';';
            terms += to_decimal(w.terms[i]);
        }
        out += csv_escape(to_decimal(w.start)) + ',' + csv_escape(to_decimal(w.d)) + ',' +
               std::to_string(w.length) + ',' + csv_escape(terms) + '\n';
    }
    return out;
}

std::string apfree_csv(const APFreeResult& r) {
    std::string witness;
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        if (i > 0) witness += ';';
        witness += std::to_string(r.witness[i]);
    }
    std::string out = "N,k,size,method,witness\n";
    out += std::to_string(r.N) + ',' + std::to_string(r.k) + ',' + std::to_string(r.size) + ',' +
           r.method + ',' + csv_escape(witness) + '\n';
    return out;
}

std::string violations_csv(const std::vector<DViolation>& violations) {
    std::string out = "n_red,d_red,reason\n";
    for (const auto& v : violations) {
        out += std::to_string(v.n_red) + ',' + std::to_string(v.d_red) + ',' +
               csv_escape(v.reason) + '\n';
    }
    return out;
}

}  // namespace powlab
