#include "kzcbh/serialize.hpp"

#include "json.hpp"

#include "kzcbh/rational.hpp"

namespace kzcbh {

namespace {

using nlohmann::json;


json word_indices(const Word &w)
{
    json arr = json::array();
    for (std::size_t i = 0; i < w.size(); ++i)
        arr.push_back(w.letter(i));
    return arr;
}

Word word_from_indices(const json &arr, int alphabet)
{
    std::vector<int> letters;
    for (const auto &v : arr)
        letters.push_back(v.get<int>());
    Word w = Word::from_ints(letters);
    if (w.size() > 0 && w.max_letter() >= alphabet)
        throw std::domain_error("serialize: word letter exceeds the alphabet");
    return w;
}

json rational_term(const Word &w, const Rational &c)
{
    json t;
    t["word"] = word_indices(w);
    t["num"] = numerator_of(c).str();
    t["den"] = denominator_of(c).str();
    return t;
}

json symbolic_parts(const SymbolicCoeff &c)
{
    json arr = json::array();
    for (const auto &[bits, r] : c.parts()) {
        json rec;
        if (bits.empty()) {
            rec["seq"] = "";
        } else {
            rec["seq"] = AdmissibleSeq(bits).str();
        }
        rec["num"] = numerator_of(r).str();
        rec["den"] = denominator_of(r).str();
        arr.push_back(rec);
    }
    return arr;
}

std::string dump(const json &doc, bool pretty) { return doc.dump(pretty ? 2 : -1) + "\n"; }

constexpr const char *kLyndonBasis = "lyndon-lex-standard-factorization";

} // namespace

std::string to_document(const Series &x, bool pretty)
{
    json doc;
    doc["kind"] = "series";
    doc["alphabet"] = x.alphabet();
    doc["degree"] = x.degree();
    json terms = json::array();
    for (const auto &[w, c] : x.terms())
        terms.push_back(rational_term(w, c));
    doc["terms"] = std::move(terms);
    return dump(doc, pretty);
}

std::string to_document(const LieElement &x, bool pretty)
{
    json doc;
    doc["kind"] = "lie-element";
    doc["basis"] = kLyndonBasis;
    doc["alphabet"] = x.alphabet();
    doc["degree"] = x.degree();
    json terms = json::array();
    for (const auto &[w, c] : x.coords())
        terms.push_back(rational_term(w, c));
    doc["terms"] = std::move(terms);
    return dump(doc, pretty);
}

std::string to_document(const NumericSeries &x, double tolerance, bool pretty)
{
    json doc;
    doc["kind"] = "series-numeric";
    doc["alphabet"] = x.alphabet();
    doc["degree"] = x.degree();
    doc["tolerance"] = tolerance;
    json terms = json::array();
    for (const auto &[w, c] : x.terms()) {
        json t;
        t["word"] = word_indices(w);
        t["value"] = c;
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return dump(doc, pretty);
}

std::string to_document(const NumericLieElement &x, double tolerance, bool pretty)
{
    json doc;
    doc["kind"] = "lie-element-numeric";
    doc["basis"] = kLyndonBasis;
    doc["alphabet"] = x.alphabet();
    doc["degree"] = x.degree();
    doc["tolerance"] = tolerance;
    json terms = json::array();
    for (const auto &[w, c] : x.coords()) {
        json t;
        t["word"] = word_indices(w);
        t["value"] = c;
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return dump(doc, pretty);
}

std::string to_document(const SymbolicSeries &x, bool pretty)
{
    json doc;
    doc["kind"] = "series-symbolic";
    doc["alphabet"] = x.alphabet();
    doc["degree"] = x.degree();
    json terms = json::array();
    for (const auto &[w, c] : x.terms()) {
        json t;
        t["word"] = word_indices(w);
        t["symbols"] = symbolic_parts(c);
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return dump(doc, pretty);
}

std::string to_document(const SymbolicLieSeries &x, bool pretty)
{
    json doc;
    doc["kind"] = "lie-element-symbolic";
    doc["basis"] = kLyndonBasis;
    doc["alphabet"] = x.alphabet();
    doc["degree"] = x.degree();
    json terms = json::array();
    for (const auto &[w, c] : x.coords()) {
        json t;
        t["word"] = word_indices(w);
        t["symbols"] = symbolic_parts(c);
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return dump(doc, pretty);
}

Series series_from_document(const std::string &text)
{
    json doc = json::parse(text);
    if (doc.at("kind").get<std::string>() != "series")
        throw std::domain_error("series_from_document: wrong document kind");
    const int alphabet = doc.at("alphabet").get<int>();
    const int degree = doc.at("degree").get<int>();
    Series out(alphabet, degree);
    for (const auto &t : doc.at("terms")) {
        Word w = word_from_indices(t.at("word"), alphabet);
        out.set_coefficient(w, rational_from_strings(t.at("num").get<std::string>(),
                                                     t.at("den").get<std::string>()));
    }
    return out;
}

LieElement lie_from_document(const std::string &text)
{
    json doc = json::parse(text);
    if (doc.at("kind").get<std::string>() != "lie-element")
        throw std::domain_error("lie_from_document: wrong document kind");
    if (doc.at("basis").get<std::string>() != kLyndonBasis)
        throw std::domain_error("lie_from_document: unknown basis convention");
    const int alphabet = doc.at("alphabet").get<int>();
    const int degree = doc.at("degree").get<int>();
    LieElement out(alphabet, degree);
    for (const auto &t : doc.at("terms")) {
        Word w = word_from_indices(t.at("word"), alphabet);
        out.set_coordinate(w, rational_from_strings(t.at("num").get<std::string>(),
                                               t.at("den").get<std::string>()));
    }
    return out;
}

} // namespace kzcbh
