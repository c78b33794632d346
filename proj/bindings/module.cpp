// Python bindings for the main operations. Arbitrary-precision integers
// cross the boundary as Python ints (via decimal strings).

#include "powlab/abc_ap.hpp"
#include "powlab/factor.hpp"
#include "powlab/interval_lab.hpp"
#include "powlab/sieve.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace powlab;

namespace pybind11::detail {

template <>
struct type_caster<powlab::Natural> {
public:
    PYBIND11_TYPE_CASTER(powlab::Natural, const_name("int"));

    bool load(handle src, bool) {
        if (PyFloat_Check(src.ptr())) return false;  // no silent truncation
        PyObject* as_long = PyNumber_Long(src.ptr());
        if (!as_long) {
            PyErr_Clear();
            return false;
        }
        const object holder = reinterpret_steal<object>(as_long);
        const object text = reinterpret_steal<object>(PyObject_Str(holder.ptr()));
        if (!text) {
            PyErr_Clear();
            return false;
        }
        value = powlab::Natural(std::string(py::str(text)));
        return true;
    }

    static handle cast(const powlab::Natural& src, return_value_policy, handle) {
        const std::string text = src.str();
        return PyLong_FromString(text.c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

PoweredThreshold parse_k(const std::string& k) {
    return PoweredThreshold::parse(k);
}

py::list factorization_entries(const Factorization& f) {
    py::list out;
    for (const auto& e : f.entries()) out.append(py::make_tuple(e.prime, e.exponent));
    return out;
}

py::dict report_dict(const CountReport& r) {
    py::dict d;
    d["x"] = r.interval.x;
    d["y"] = r.interval.y;
    py::dict params;
    for (const auto& [name, value] : r.params) {
        if (const auto* n = std::get_if<Natural>(&value))
            params[name.c_str()] = *n;
        else if (const auto* rat = std::get_if<Rational>(&value))
            params[name.c_str()] = rat->str();
        else if (const auto* k = std::get_if<PoweredThreshold>(&value))
            params[name.c_str()] = k->str();
        else
            params[name.c_str()] = std::get<double>(value);
    }
    d["params"] = params;
    d["count"] = r.count;
    d["bound_form"] = r.bound_form;
    d["bound_value"] = r.bound_value ? py::cast(*r.bound_value) : py::none();
    d["ratio"] = r.ratio ? py::cast(*r.ratio) : py::none();
    return d;
}

py::dict triple_dict(const AbcTriple& t) {
    py::dict d;
    d["n"] = t.n;
    d["d"] = t.d;
    d["t"] = t.t;
    d["n_red"] = t.n_red;
    d["d_red"] = t.d_red;
    d["D"] = t.D;
    d["e2"] = t.e2;
    d["e3"] = t.e3;
    d["a"] = t.a;
    d["b"] = t.b;
    d["c"] = t.c;
    d["quality"] = t.quality;
    return d;
}

py::dict apfree_dict(const APFreeResult& r) {
    py::dict d;
    d["N"] = r.N;
    d["k"] = r.k;
    d["size"] = r.size;
    d["method"] = r.method;
    d["witness"] = r.witness;
    return d;
}

py::dict decomposition_dict(const CaseDecomposition& d) {
    py::dict out;
    out["n"] = d.n;
    out["a"] = d.a;
    out["b"] = d.b;
    out["a1"] = d.a1;
    out["a2"] = d.a2;
    out["b1"] = d.b1;
    out["b2"] = d.b2;
    out["label"] = case_label_name(d.label);
    return out;
}

SieveConfig sieve_cfg(unsigned threads) {
    SieveConfig cfg;
    cfg.threads = threads;
    return cfg;
}

LabConfig lab_cfg(unsigned threads) {
    LabConfig cfg;
    cfg.sieve.threads = threads;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic predicates, interval sieves, and counting "
              "experiments on powered numbers";

    m.def("factor", [](const Natural& n) { return factorization_entries(factor(n)); },
          py::arg("n"), "Exact prime factorization as a list of (prime, exponent) pairs");
    m.def("is_prime", [](const Natural& n) { return is_prime(n); }, py::arg("n"));

    m.def("kernel", [](const Natural& n) { return kernel(factor(n)); }, py::arg("n"),
          "Squarefree kernel: product of the distinct primes of n");
    m.def("squarefree_part", [](const Natural& n) { return squarefree_part(factor(n)); },
          py::arg("n"));
    m.def("powerful_part", [](const Natural& n) { return powerful_part(factor(n)); },
          py::arg("n"));
    m.def("largest_prime_factor", [](const Natural& n) { return largest_prime_factor(factor(n)); },
          py::arg("n"));
    m.def("smallest_prime_factor",
          [](const Natural& n) -> std::optional<Natural> { return smallest_prime_factor(factor(n)); },
          py::arg("n"), "Smallest prime factor; None for n = 1");
    m.def("is_powerful", [](const Natural& n) { return is_powerful(factor(n)); }, py::arg("n"));
    m.def("is_k_full", [](const Natural& n, unsigned k) { return is_k_full(factor(n), k); },
          py::arg("n"), py::arg("k"));
    m.def("is_squarefree", [](const Natural& n) { return is_squarefree(factor(n)); },
          py::arg("n"));
    m.def("is_k_powered",
          [](const Natural& n, const std::string& k) { return is_k_powered(factor(n), parse_k(k)); },
          py::arg("n"), py::arg("k"), "k given as 'p/q' or 'p'");
    m.def("powered_exponent", [](const Natural& n) { return powered_exponent(factor(n)); },
          py::arg("n"), "log n / log kernel(n)");
    m.def("smooth_part",
          [](const Natural& n, const Natural& w) { return smooth_part(factor(n), w); },
          py::arg("n"), py::arg("w"), "Largest w-smooth divisor of n");
    m.def("is_w_smooth",
          [](const Natural& n, const Natural& w) { return is_w_smooth(factor(n), w); },
          py::arg("n"), py::arg("w"));

    m.def("primes_up_to", &primes_up_to, py::arg("bound"));
    m.def("factor_interval",
          [](const Natural& x, const Natural& y, unsigned threads) {
              py::list out;
              for (const auto& [n, f] : factor_interval(Interval{x, y}, sieve_cfg(threads)))
                  out.append(py::make_tuple(n, factorization_entries(f)));
              return out;
          },
          py::arg("x"), py::arg("y"), py::arg("threads") = 1,
          "Factorizations of every n in (x, x+y]");
    m.def("enumerate_powerful",
          [](const Natural& x, const Natural& y) { return enumerate_powerful(Interval{x, y}); },
          py::arg("x"), py::arg("y"), "Powerful numbers in (x, x+y]");
    m.def("enumerate_k_powered",
          [](const Natural& x, const Natural& y, const std::string& k, unsigned threads) {
              return enumerate_k_powered(Interval{x, y}, parse_k(k), sieve_cfg(threads));
          },
          py::arg("x"), py::arg("y"), py::arg("k"), py::arg("threads") = 1);
    m.def("count_rough",
          [](const Natural& x, const Natural& y) { return count_rough(Interval{x, y}); },
          py::arg("x"), py::arg("y"),
          "Count of n in (x, x+y] with no prime factor p with p^2 <= y");

    m.def("count_t1",
          [](const Natural& x, const Natural& y, const std::string& k, const std::string& delta,
             unsigned threads) {
              return report_dict(
                  count_t1(Interval{x, y}, parse_k(k), Rational::parse(delta), lab_cfg(threads)));
          },
          py::arg("x"), py::arg("y"), py::arg("k"), py::arg("delta") = "0",
          py::arg("threads") = 1,
          "k-powered n whose powerful part is y^(1-delta)-smooth");
    m.def("count_t2",
          [](const Natural& x, const Natural& y, const std::string& k, const Natural& w,
             unsigned threads) {
              return report_dict(count_t2(Interval{x, y}, parse_k(k), w, lab_cfg(threads)));
          },
          py::arg("x"), py::arg("y"), py::arg("k"), py::arg("w"), py::arg("threads") = 1,
          "k-powered n with w-smooth squarefree part");
    m.def("count_powered",
          [](const Natural& x, const Natural& y, const std::string& k, unsigned threads) {
              return report_dict(count_powered(Interval{x, y}, parse_k(k), lab_cfg(threads)));
          },
          py::arg("x"), py::arg("y"), py::arg("k"), py::arg("threads") = 1);
    m.def("count_smooth_powerful",
          [](const Natural& x, const Natural& y, unsigned threads) {
              return report_dict(count_smooth_powerful(Interval{x, y}, lab_cfg(threads)));
          },
          py::arg("x"), py::arg("y"), py::arg("threads") = 1,
          "Powerful n with p+(n)^2 <= y");
    m.def("count_verysmooth",
          [](const Natural& x, const Natural& y, unsigned threads) {
              return report_dict(count_verysmooth(Interval{x, y}, lab_cfg(threads)));
          },
          py::arg("x"), py::arg("y"), py::arg("threads") = 1);
    m.def("count_smooth_divisor",
          [](const Natural& x, const Natural& y, const std::string& alpha, const Natural& w,
             unsigned threads) {
              return report_dict(
                  count_smooth_divisor(Interval{x, y}, Rational::parse(alpha), w, lab_cfg(threads)));
          },
          py::arg("x"), py::arg("y"), py::arg("alpha"), py::arg("w"), py::arg("threads") = 1,
          "Count of n having a w-smooth divisor greater than y^alpha");
    m.def("count_rough_report",
          [](const Natural& x, const Natural& y) {
              return report_dict(count_rough_report(Interval{x, y}));
          },
          py::arg("x"), py::arg("y"));

    m.def("decompose_case",
          [](const Natural& n, const Natural& x, const Natural& y, const std::string& k,
             const Natural& z, const std::string& delta) {
              return decomposition_dict(
                  decompose_case(n, Interval{x, y}, parse_k(k), z, Rational::parse(delta)));
          },
          py::arg("n"), py::arg("x"), py::arg("y"), py::arg("k"), py::arg("z"),
          py::arg("delta") = "0",
          "Split n = a1 a2 b1 b2 and classify it (case1/case2/case3a/case3b/none)");
    m.def("verify_b2_claim",
          [](const Natural& x, const Natural& y, const std::string& k, const Natural& z,
             unsigned threads) {
              return verify_b2_claim(Interval{x, y}, parse_k(k), z, lab_cfg(threads));
          },
          py::arg("x"), py::arg("y"), py::arg("k"), py::arg("z"), py::arg("threads") = 1,
          "k-powered n with b1^2 <= z and b2 = 1 (expected empty)");
    m.def("default_z",
          [](const Natural& y, const std::string& k) { return default_z(y, parse_k(k)); },
          py::arg("y"), py::arg("k"), "floor(y^((k-1)/k))");

    m.def("identity_check",
          [](const Natural& n, const Natural& d) {
              const auto r = identity_check(n, d);
              return py::make_tuple(r.lhs1, r.lhs2, r.rhs, r.holds);
          },
          py::arg("n"), py::arg("d"),
          "(n+2d)^3 (n-2d) + 16 d^3 (n+d) = n^3 (n+4d), evaluated exactly");
    m.def("build_abc_triple",
          [](const Natural& n, const Natural& d) { return triple_dict(build_abc_triple(n, d)); },
          py::arg("n"), py::arg("d"));
    m.def("abc_quality", &abc_quality, py::arg("a"), py::arg("b"), py::arg("c"),
          "log c / log kernel(abc)");
    m.def("scan_d_structure",
          [](std::uint64_t n_max, unsigned threads) {
              py::list out;
              for (const auto& v : scan_d_structure(n_max, threads))
                  out.append(py::make_tuple(v.n_red, v.d_red, v.reason));
              return out;
          },
          py::arg("n_max") = 1500, py::arg("threads") = 1);

    m.def("find_ap_powered",
          [](const Natural& x, const Natural& y, const std::string& pred, std::size_t L,
             const std::optional<std::string>& k, unsigned threads) {
              std::optional<PoweredThreshold> kt;
              if (k) kt = parse_k(*k);
              const auto preds = pred == "kpowered" ? APPredicate::k_powered : APPredicate::powerful;
              py::list out;
              for (const auto& w :
                   find_ap_powered(Interval{x, y}, preds, kt, L, sieve_cfg(threads))) {
                  py::dict item;
                  item["start"] = w.start;
                  item["d"] = w.d;
                  item["length"] = w.length;
                  item["terms"] = w.terms;
                  out.append(item);
              }
              return out;
          },
          py::arg("x"), py::arg("y"), py::arg("pred") = "powerful", py::arg("L") = 3,
          py::arg("k") = std::nullopt, py::arg("threads") = 1,
          "Maximal arithmetic runs among powerful / k-powered numbers");
    m.def("threshold_y",
          [](const Natural& x, const std::string& k) { return threshold_y(x, parse_k(k)); },
          py::arg("x"), py::arg("k"), "floor(x^((4k-5)/(8k))), requires k > 5/4");

    m.def("rk_exact",
          [](std::uint64_t N, unsigned k) { return apfree_dict(rk_exact(N, k)); },
          py::arg("N"), py::arg("k"));
    m.def("rk_greedy",
          [](std::uint64_t N, unsigned k) { return apfree_dict(rk_greedy(N, k)); },
          py::arg("N"), py::arg("k"));
    m.def("bound_eval",
          [](double N, const std::string& form, const std::map<std::string, double>& constants) {
              return bound_eval(N, parse_bound_form(form), constants);
          },
          py::arg("N"), py::arg("form"), py::arg("constants") = std::map<std::string, double>{},
          "gowers / r3_exp / gt4 / lss bound shapes");

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
