#pragma once

// JSON and CSV renderings of the toolkit's value types, plus the inverse
// parsers. All output is deterministic: object keys appear in a fixed
// order and arrays are sorted, so equal values always produce
// byte-identical text.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "trivec/charseries.hpp"
#include "trivec/dmodcat.hpp"
#include "trivec/quiverrep.hpp"
#include "trivec/schur.hpp"
#include "trivec/weights.hpp"

namespace trivec {

/// Order-preserving JSON value; keys are emitted in insertion order.
using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rationals as "p/q" strings.

inline std::string formatRational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parseRational(const std::string& text) {
    const std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        const long long num = std::stoll(text.substr(0, slash));
        const long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);  // throws bad_rational on zero denominator
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("parseRational: zero denominator in '" + text + "'");
    } catch (const std::exception&) {
        throw std::invalid_argument("parseRational: malformed rational '" + text + "'");
    }
}

// ---------------------------------------------------------------------------
// Windows, weights, and virtual characters.

inline Json toJson(const TruncationWindow& w) {
    Json j;
    j["minDegree"] = w.minDegree();
    j["maxDegree"] = w.maxDegree();
    if (w.hasBox()) {
        j["minEntry"] = w.minEntry();
        j["maxEntry"] = w.maxEntry();
    }
    return j;
}

inline TruncationWindow truncationWindowFromJson(const Json& j) {
    const long long lo = j.at("minDegree").get<long long>();
    const long long hi = j.at("maxDegree").get<long long>();
    if (j.contains("minEntry") || j.contains("maxEntry"))
        return TruncationWindow::box(lo, hi, j.at("minEntry").get<int>(),
                                     j.at("maxEntry").get<int>());
    return TruncationWindow(lo, hi);
}

inline Json toJson(const VirtualCharacter& c) {
    Json j;
    j["rank"] = c.rank();
    j["window"] = toJson(c.window());
    Json terms = Json::array();
    // The term map is ordered lexicographically by weight already.
    for (const auto& [w, m] : c.terms()) {
        Json t;
        t["weight"] = w.entries();
        t["mult"] = m;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline VirtualCharacter virtualCharacterFromJson(const Json& j) {
    const int rank = j.at("rank").get<int>();
    VirtualCharacter c(rank, truncationWindowFromJson(j.at("window")));
    for (const Json& t : j.at("terms")) {
        const IntVec entries = t.at("weight").get<IntVec>();
        c.addTerm(Weight(entries), t.at("mult").get<long long>());
    }
    return c;
}

// ---------------------------------------------------------------------------
// Symmetric Laurent polynomials.

inline Json toJson(const LaurentSymPoly& p) {
    Json j;
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json t;
        t["exp"] = e;
        t["coeff"] = c;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline LaurentSymPoly laurentSymPolyFromJson(const Json& j, int rank = 6) {
    LaurentSymPoly p{rank, {}};
    for (const Json& t : j.at("terms")) {
        const IntVec e = t.at("exp").get<IntVec>();
        if (static_cast<int>(e.size()) != rank)
            throw std::invalid_argument("laurentSymPolyFromJson: exponent of wrong rank");
        const long long c = t.at("coeff").get<long long>();
        if (c != 0) p.terms[e] += c;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Quiver representations.

inline Json toJson(const QuiverRep& r) {
    Json j;
    Json dims = Json::object();
    for (const auto& [v, d] : r.dims) dims[to_string(v)] = d;
    j["dims"] = std::move(dims);
    Json maps = Json::object();
    for (const auto& [a, m] : r.maps) {
        Json rows = Json::array();
        for (const auto& row : m) {
            Json cells = Json::array();
            for (const Rational& x : row) cells.push_back(formatRational(x));
            rows.push_back(std::move(cells));
        }
        maps[to_string(a)] = std::move(rows);
    }
    j["maps"] = std::move(maps);
    return j;
}

inline QuiverRep quiverRepFromJson(const Json& j) {
    QuiverRep r;
    for (const auto& [key, value] : j.at("dims").items())
        r.dims[parseVertex(key)] = value.get<int>();
    if (j.contains("maps"))
        for (const auto& [key, value] : j.at("maps").items()) {
            RatMatrix m;
            for (const Json& row : value) {
                std::vector<Rational> cells;
                for (const Json& cell : row) cells.push_back(parseRational(cell.get<std::string>()));
                m.push_back(std::move(cells));
            }
            r.maps[parseArrow(key)] = std::move(m);
        }
    return r;
}

// ---------------------------------------------------------------------------
// Local cohomology tables and spectral grids.

inline Json toJson(const SimpleSum& s) {
    Json j = Json::object();
    for (const auto& [label, mult] : s.multiplicities) j[to_string(label)] = mult;
    return j;
}

inline SimpleSum simpleSumFromJson(const Json& j) {
    SimpleSum s;
    for (const auto& [key, value] : j.items())
        s.add(parseSimpleLabel(key), value.get<long long>());
    return s;
}

inline Json toJson(const LocCohTable& t) {
    Json j;
    j["source"] = to_string(t.source);
    j["support"] = to_string(t.support);
    Json rows = Json::object();
    for (const auto& [i, sum] : t.rows) rows[std::to_string(i)] = toJson(sum);
    j["rows"] = std::move(rows);
    Json nonsplit = Json::array();
    for (int i : t.nonsplit) nonsplit.push_back(i);
    j["nonsplit"] = std::move(nonsplit);
    return j;
}

inline LocCohTable locCohTableFromJson(const Json& j) {
    LocCohTable t;
    t.source = parseSourceName(j.at("source").get<std::string>());
    t.support = parseOrbitLabel(j.at("support").get<std::string>());
    for (const auto& [key, value] : j.at("rows").items()) {
        const SimpleSum sum = simpleSumFromJson(value);
        if (!sum.isZero()) t.rows[std::stoi(key)] = sum;
    }
    if (j.contains("nonsplit"))
        for (const Json& i : j.at("nonsplit")) t.nonsplit.insert(i.get<int>());
    return t;
}

inline Json toJson(const SpectralGrid& g) {
    Json j;
    Json entries = Json::array();
    for (const auto& [pos, sum] : g.entries) {
        Json cell;
        cell["i"] = pos.first;
        cell["j"] = pos.second;
        cell["cells"] = toJson(sum);
        entries.push_back(std::move(cell));
    }
    j["entries"] = std::move(entries);
    Json abutment = Json::object();
    for (const auto& [n, sum] : g.abutment) abutment[std::to_string(n)] = toJson(sum);
    j["abutment"] = std::move(abutment);
    Json used = Json::array();
    for (int r : g.extensionRowsUsed) used.push_back(r);
    j["extensionRowsUsed"] = std::move(used);
    return j;
}

inline SpectralGrid spectralGridFromJson(const Json& j) {
    SpectralGrid g;
    for (const Json& cell : j.at("entries")) {
        const SimpleSum sum = simpleSumFromJson(cell.at("cells"));
        if (!sum.isZero()) g.entries[{cell.at("i").get<int>(), cell.at("j").get<int>()}] = sum;
    }
    if (j.contains("abutment"))
        for (const auto& [key, value] : j.at("abutment").items()) {
            const SimpleSum sum = simpleSumFromJson(value);
            if (!sum.isZero()) g.abutment[std::stoi(key)] = sum;
        }
    if (j.contains("extensionRowsUsed"))
        for (const Json& r : j.at("extensionRowsUsed")) g.extensionRowsUsed.push_back(r.get<int>());
    return g;
}

inline Json toJson(const SsCheckResult& r) {
    Json j;
    j["consistent"] = r.consistent;
    Json cancellation = Json::array();
    for (const auto& c : r.cancellation) {
        Json item;
        item["from"] = {c.from.first, c.from.second};
        item["to"] = {c.to.first, c.to.second};
        item["label"] = to_string(c.label);
        item["count"] = c.count;
        cancellation.push_back(std::move(item));
    }
    j["cancellation"] = std::move(cancellation);
    return j;
}

// ---------------------------------------------------------------------------
// Lyubeznik numbers as CSV.

inline std::string lyubeznikCsv(const std::map<std::pair<int, int>, long long>& table) {
    std::string out = "i,j,value\n";
    for (const auto& [pos, value] : table)
        out += std::to_string(pos.first) + "," + std::to_string(pos.second) + "," +
               std::to_string(value) + "\n";
    return out;
}

}  // namespace trivec
