#include "hlv/json_io.hpp"

#include <stdexcept>

namespace hlv {

namespace {

const char* kind_name(ScanKind kind)
{
    switch (kind) {
    case ScanKind::Skew:
        return "skew";
    case ScanKind::SkewB:
        return "skew-b";
    case ScanKind::Hall:
        return "hall";
    }
    return "skew";
}

ScanKind kind_from_name(const std::string& name)
{
    if (name == "skew")
        return ScanKind::Skew;
    if (name == "skew-b")
        return ScanKind::SkewB;
    if (name == "hall")
        return ScanKind::Hall;
    throw std::invalid_argument("unknown scan kind: " + name);
}

std::vector<int> int_array(const Json& j, const char* what)
{
    if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be a JSON array of integers");
    std::vector<int> out;
    for (const Json& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(what) + " must be a JSON array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace

Json to_json(const TPoly& p)
{
    Json out = Json::array();
    for (const BigRational& c : p.dense())
        out.push_back(to_fraction_string(c));
    return out;
}

Json to_json(const TRational& r)
{
    return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

Json to_json(const Partition& p)
{
    return Json(p.parts());
}

Json to_json(const Composition& c)
{
    return Json(c.parts());
}

Json to_json(const SymFunc& f)
{
    Json terms = Json::array();
    for (const auto& [index, coeff] : f.terms())
        terms.push_back({{"index", to_json(index)}, {"coeff", to_json(coeff)}});
    return Json{{"basis", "p"}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const MultiPoly& p)
{
    Json out = Json::array();
    for (const auto& [exponents, coeff] : p.terms())
        out.push_back({{"exponents", exponents}, {"coeff", to_json(coeff)}});
    return out;
}

Json to_json(const StabilityReport& report)
{
    Json samples = Json::array();
    for (const auto& [m, value] : report.samples)
        samples.push_back({{"m", m}, {"value", to_json(value)}});
    Json out{{"lambda", to_json(report.lambda)},
             {"mu", to_json(report.mu)},
             {"nu", to_json(report.nu)},
             {"kind", kind_name(report.kind)},
             {"offset", report.offset},
             {"samples", std::move(samples)},
             {"onset", nullptr},
             {"stable", nullptr},
             {"bound", report.theorem_bound}};
    if (report.onset)
        out["onset"] = *report.onset;
    if (report.stable_value)
        out["stable"] = to_json(*report.stable_value);
    return out;
}

Json to_json(const std::map<Partition, TRational>& coeffs)
{
    Json out = Json::array();
    for (const auto& [index, coeff] : coeffs)
        out.push_back({{"index", to_json(index)}, {"coeff", to_json(coeff)}});
    return out;
}

TPoly tpoly_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be a JSON array of \"num/den\" strings");
    std::vector<BigRational> coeffs;
    for (const Json& x : j) {
        if (!x.is_string())
            throw std::invalid_argument("polynomial coefficients must be strings");
        coeffs.push_back(parse_rational(x.get<std::string>()));
    }
    return TPoly::from_dense(coeffs);
}

TRational trational_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational function must be {\"num\": [...], \"den\": [...]}");
    return TRational(tpoly_from_json(j.at("num")), tpoly_from_json(j.at("den")));
}

Partition partition_from_json(const Json& j)
{
    return Partition(int_array(j, "partition"));
}

Composition composition_from_json(const Json& j)
{
    return Composition(int_array(j, "composition"));
}

SymFunc symfunc_from_json(const Json& j)
{
    if (!j.is_object() || j.value("basis", "") != "p" || !j.contains("terms"))
        throw std::invalid_argument("symmetric function must be {\"basis\":\"p\",\"terms\":[...]}");
    SymFunc out;
    for (const Json& term : j.at("terms"))
        out.add_term(partition_from_json(term.at("index")), trational_from_json(term.at("coeff")));
    return out;
}

MultiPoly multipoly_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("multivariate polynomial must be a JSON array");
    if (j.empty())
        return MultiPoly();
    const std::vector<int> first = int_array(j.front().at("exponents"), "exponents");
    MultiPoly out(static_cast<int>(first.size()));
    for (const Json& term : j) {
        const std::vector<int> exponents = int_array(term.at("exponents"), "exponents");
        if (exponents.size() != first.size())
            throw std::invalid_argument("exponent vectors must all have the same length");
        out.add_term(exponents, trational_from_json(term.at("coeff")));
    }
    return out;
}

StabilityReport stability_report_from_json(const Json& j)
{
    StabilityReport report;
    report.lambda = partition_from_json(j.at("lambda"));
    report.mu = partition_from_json(j.at("mu"));
    report.nu = partition_from_json(j.at("nu"));
    report.kind = kind_from_name(j.value("kind", "skew"));
    report.offset = j.at("offset").get<int>();
    report.theorem_bound = j.at("bound").get<int>();
    for (const Json& s : j.at("samples"))
        report.samples.emplace_back(s.at("m").get<int>(), trational_from_json(s.at("value")));
    if (!j.at("onset").is_null())
        report.onset = j.at("onset").get<int>();
    if (!j.at("stable").is_null())
        report.stable_value = trational_from_json(j.at("stable"));
    return report;
}

} // namespace hlv
