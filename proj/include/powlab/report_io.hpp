#ifndef POWLAB_REPORT_IO_HPP
#define POWLAB_REPORT_IO_HPP

#include "powlab/abc_ap.hpp"
#include "powlab/factorization.hpp"
#include "powlab/interval_lab.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace powlab {

// All reports serialize with fixed key order (insertion order), big integers
// as decimal strings, and doubles in shortest round-trip form. Byte-identical
// output for identical inputs is part of the contract.
using OrderedJson = nlohmann::ordered_json;

// Shortest decimal representation that parses back to the same double.
std::string double_repr(double v);

// RFC-4180 field quoting.
std::string csv_escape(const std::string& field);

std::string param_value_str(const ParamValue& v);
std::string params_compact(const ParamList& params);  // "k=2/1;delta=1/2;C=1"

OrderedJson report_to_json(const CountReport& r);
CountReport report_from_json(const OrderedJson& j);

// Fixed column order: x,y,params,count,bound_form,bound_value,ratio
extern const char* const kCountReportCsvHeader;
std::string report_csv_row(const CountReport& r);
std::string report_csv_table(const std::vector<CountReport>& reports);

OrderedJson factorization_to_json(const Natural& n, const Factorization& f);
OrderedJson values_to_json(const Interval& iv, const std::vector<Natural>& values);
OrderedJson decomposition_to_json(const CaseDecomposition& d);
OrderedJson histogram_to_json(const CaseHistogram& h, const PoweredThreshold& k);
OrderedJson counterexamples_to_json(const Interval& iv, const PoweredThreshold& k,
                                    const Natural& z, const std::vector<Natural>& bad);
OrderedJson identity_to_json(const Natural& n, const Natural& d, const IdentityCheck& c);
OrderedJson triple_to_json(const AbcTriple& t);
OrderedJson violations_to_json(std::uint64_t n_max, const std::vector<DViolation>& violations);
OrderedJson witnesses_to_json(const Interval& iv, const std::string& predicate, std::size_t L,
                              const std::vector<APWitness>& ws);
OrderedJson apfree_to_json(const APFreeResult& r);
OrderedJson bound_to_json(const std::string& form, double n, const std::map<std::string, double>& constants,
                          double value);

// CSV renderings for the list-like outputs; each returns header plus rows.
std::string values_csv(const std::vector<Natural>& values);
std::string witnesses_csv(const std::vector<APWitness>& ws);
std::string apfree_csv(const APFreeResult& r);
std::string violations_csv(const std::vector<DViolation>& violations);

}  // namespace powlab

#endif
