// Command-line front end. Every subcommand wraps exactly one library
// operation or named check suite; --format selects text, JSON, or CSV
// rendering. Exit codes: 0 success, 1 failed check, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "trivec/bott.hpp"
#include "trivec/charseries.hpp"
#include "trivec/checks.hpp"
#include "trivec/dmodcat.hpp"
#include "trivec/quiverrep.hpp"
#include "trivec/schur.hpp"
#include "trivec/serialize.hpp"

namespace {

using trivec::Json;

int divFloor(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return static_cast<int>(q);
}

int divCeil(long long a, long long b) { return -divFloor(-a, b); }

trivec::Weight weightFromInts(const std::vector<int>& v) { return trivec::Weight(trivec::IntVec(v)); }

[[noreturn]] void usageError(const std::string& message) { throw CLI::ValidationError(message); }

void requireFormat(const std::string& format, const std::vector<std::string>& allowed) {
    for (const std::string& f : allowed)
        if (format == f) return;
    usageError("--format " + format + " is not available for this subcommand");
}

// --- bott -------------------------------------------------------------

int runBott(const std::vector<int>& alpha, const std::vector<int>& beta, int k, int n) {
    const trivec::BottResult r = trivec::bottCohomology(alpha, beta, k, n);
    Json j;
    if (r.vanishing) {
        j["vanishing"] = true;
    } else {
        j["degree"] = r.degree;
        j["weight"] = r.weight.entries();
    }
    std::cout << j.dump() << '\n';
    return 0;
}

// --- char -------------------------------------------------------------

bool charNeedsBox(trivec::CharName name) {
    using trivec::CharName;
    switch (name) {
        case CharName::S:
        case CharName::E:
            return false;
        default:
            return true;
    }
}

int runChar(const std::string& nameText, std::optional<long long> minDeg,
            std::optional<long long> maxDeg, std::optional<int> minEntry,
            std::optional<int> maxEntry, const std::vector<int>& weightArg,
            const std::string& format) {
    const trivec::CharName name = trivec::parseCharName(nameText);
    if (minDeg.has_value() != maxDeg.has_value())
        usageError("char: --min-deg and --max-deg must be given together");
    if (minEntry.has_value() != maxEntry.has_value())
        usageError("char: --min-entry and --max-entry must be given together");
    if (!minDeg && weightArg.empty())
        usageError("char: need either --weight or --min-deg/--max-deg");

    trivec::TruncationWindow window = [&] {
        if (!minDeg) return trivec::TruncationWindow::around(weightFromInts(weightArg));
        if (minEntry) return trivec::TruncationWindow::box(*minDeg, *maxDeg, *minEntry, *maxEntry);
        if (!charNeedsBox(name)) return trivec::TruncationWindow(*minDeg, *maxDeg);
        // Closed formulas with mixed-sign denominators need entry bounds; the
        // default pads the per-entry average degree by 9 on both sides.
        return trivec::TruncationWindow::box(*minDeg, *maxDeg, divFloor(*minDeg, 6) - 9,
                                             divCeil(*maxDeg, 6) + 9);
    }();

    const trivec::VirtualCharacter character = trivec::namedCharacter(name, window);

    if (!weightArg.empty()) {
        const trivec::Weight probe = weightFromInts(weightArg);
        const long long mult = character.multiplicity(probe);
        if (format == "json") {
            Json j;
            j["weight"] = probe.entries();
            j["multiplicity"] = mult;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << mult << '\n';
        }
        return 0;
    }

    if (format == "json") {
        std::cout << trivec::toJson(character).dump() << '\n';
    } else if (format == "csv") {
        std::string out = "w1,w2,w3,w4,w5,w6,mult\n";
        for (const auto& [w, m] : character.terms()) {
            for (int e : w.entries()) out += std::to_string(e) + ',';
            out += std::to_string(m) + '\n';
        }
        std::cout << out;
    } else {
        for (const auto& [w, m] : character.terms())
            std::cout << trivec::formatWeight(w) << ' ' << m << '\n';
    }
    return 0;
}

// --- plethysm ---------------------------------------------------------

int runPlethysm(int wedge, const std::string& of, const std::string& format) {
    if (of != "wedge3") usageError("plethysm: only --of wedge3 is supported");
    if (wedge < 0 || wedge > 20) usageError("plethysm: --wedge must lie in 0..20");
    const trivec::LaurentSymPoly base = trivec::schurMonomials(trivec::Weight({1, 1, 1, 0, 0, 0}));
    const trivec::VirtualCharacter constituents =
        trivec::decomposeIntoSchur(trivec::exteriorPower(base, wedge));

    long long dimSum = 0;
    for (const auto& [w, m] : constituents.terms()) dimSum += m * trivec::weylDim(w);

    if (format == "json") {
        Json j;
        Json terms = Json::array();
        for (const auto& [w, m] : constituents.terms()) {
            Json t;
            t["weight"] = w.entries();
            t["mult"] = m;
            t["dim"] = trivec::weylDim(w);
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
        j["dimensionSum"] = dimSum;
        std::cout << j.dump() << '\n';
    } else if (format == "csv") {
        std::string out = "w1,w2,w3,w4,w5,w6,mult,dim\n";
        for (const auto& [w, m] : constituents.terms()) {
            for (int e : w.entries()) out += std::to_string(e) + ',';
            out += std::to_string(m) + ',' + std::to_string(trivec::weylDim(w)) + '\n';
        }
        std::cout << out;
    } else {
        for (const auto& [w, m] : constituents.terms())
            std::cout << trivec::formatWeight(w) << ' ' << m << ' ' << trivec::weylDim(w) << '\n';
        std::cout << "dimension sum " << dimSum << '\n';
    }
    return 0;
}

// --- gr-scan ----------------------------------------------------------

int runGrScan(int x, int k, const std::string& format) {
    const trivec::GrScanTable table = trivec::grEtaScan(x, k);
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& [degree, triplets] : table) {
            Json row;
            row["x"] = x;
            row["k"] = k;
            row["degree"] = degree;
            row["count"] = triplets.size();
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << '\n';
    } else if (format == "csv") {
        std::string out = "x,k,degree,count\n";
        for (const auto& [degree, triplets] : table)
            out += std::to_string(x) + ',' + std::to_string(k) + ',' + std::to_string(degree) +
                   ',' + std::to_string(triplets.size()) + '\n';
        std::cout << out;
    } else {
        for (const auto& [degree, triplets] : table)
            std::cout << "x=" << x << " k=" << k << " degree=" << degree
                      << " count=" << triplets.size() << '\n';
    }
    return 0;
}

// --- quiver -----------------------------------------------------------

void printRepText(const trivec::QuiverRep& r) {
    std::string dims;
    for (trivec::Vertex v : trivec::allVertices) {
        if (!dims.empty()) dims += ' ';
        dims += trivec::to_string(v) + '=' + std::to_string(r.dims.at(v));
    }
    std::cout << dims << '\n';
    for (trivec::Arrow a : trivec::allArrows) {
        auto it = r.maps.find(a);
        if (it == r.maps.end() || trivec::detail::isZeroMatrix(it->second)) continue;
        std::cout << trivec::to_string(a) << ':';
        for (const auto& row : it->second) {
            std::cout << " [";
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << (c ? " " : "") << trivec::formatRational(row[c]);
            std::cout << ']';
        }
        std::cout << '\n';
    }
}

int runQuiverPaths(const std::string& format) {
    const std::vector<trivec::Path> basis = trivec::pathBasis(trivec::theQuiver());
    if (format == "json") {
        Json j;
        j["count"] = basis.size();
        Json paths = Json::array();
        for (const trivec::Path& p : basis) paths.push_back(trivec::formatPath(p));
        j["paths"] = std::move(paths);
        std::cout << j.dump() << '\n';
    } else {
        for (const trivec::Path& p : basis) std::cout << trivec::formatPath(p) << '\n';
    }
    return 0;
}

int runQuiverRep(const trivec::QuiverRep& rep, const std::string& format) {
    if (format == "json")
        std::cout << trivec::toJson(rep).dump() << '\n';
    else
        printRepText(rep);
    return 0;
}

int runQuiverIndecomposables(const std::string& format) {
    const std::vector<trivec::QuiverRep> modules =
        trivec::enumerateIndecomposables(trivec::theQuiver());
    if (format == "json") {
        Json j;
        j["count"] = modules.size();
        Json list = Json::array();
        for (const trivec::QuiverRep& m : modules) list.push_back(trivec::toJson(m));
        j["modules"] = std::move(list);
        std::cout << j.dump() << '\n';
    } else {
        for (const trivec::QuiverRep& m : modules) {
            std::string dims;
            for (trivec::Vertex v : trivec::allVertices) {
                if (!dims.empty()) dims += ' ';
                dims += trivec::to_string(v) + '=' + std::to_string(m.dims.at(v));
            }
            std::cout << dims << '\n';
        }
        std::cout << "total " << modules.size() << '\n';
    }
    return 0;
}

// --- loccoh -----------------------------------------------------------

int runLocCoh(const std::string& source, const std::string& support, const std::string& format) {
    const trivec::LocCohTable table =
        trivec::locCohTable(trivec::parseSourceName(source), trivec::parseOrbitLabel(support));
    if (format == "json") {
        std::cout << trivec::toJson(table).dump() << '\n';
    } else {
        if (table.rows.empty()) std::cout << "(zero)\n";
        for (const auto& [degree, sum] : table.rows) {
            std::cout << "H^" << degree << ':';
            bool first = true;
            for (const auto& [label, mult] : sum.multiplicities) {
                std::cout << (first ? " " : " + ");
                if (mult != 1) std::cout << mult << '*';
                std::cout << trivec::to_string(label);
                first = false;
            }
            if (table.nonsplit.count(degree)) std::cout << " (nonsplit)";
            std::cout << '\n';
        }
    }
    return 0;
}

// --- lyubeznik --------------------------------------------------------

int runLyubeznik(const std::string& orbit, const std::string& format) {
    const auto table = trivec::lyubeznikTable(trivec::parseOrbitLabel(orbit));
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& [pos, value] : table) {
            Json row;
            row["i"] = pos.first;
            row["j"] = pos.second;
            row["value"] = value;
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << '\n';
    } else {
        std::cout << trivec::lyubeznikCsv(table);
    }
    return 0;
}

// --- ss-check ---------------------------------------------------------

int runSsCheck(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) usageError("ss-check: cannot open '" + path + "'");
    Json parsed;
    try {
        parsed = Json::parse(in);
    } catch (const Json::exception& e) {
        usageError("ss-check: '" + path + "' is not valid JSON: " + e.what());
    }
    const trivec::SpectralGrid grid = trivec::spectralGridFromJson(parsed);
    const trivec::SsCheckResult result = trivec::ssCheck(grid);
    if (format == "json") {
        std::cout << trivec::toJson(result).dump() << '\n';
    } else {
        std::cout << (result.consistent ? "consistent" : "inconsistent") << '\n';
        for (const auto& c : result.cancellation)
            std::cout << "E(" << c.from.first << ',' << c.from.second << ") -> E(" << c.to.first
                      << ',' << c.to.second << "): " << trivec::to_string(c.label) << " x "
                      << c.count << '\n';
    }
    return result.consistent ? 0 : 1;
}

// --- verify -----------------------------------------------------------

int runVerify(const std::string& suite, const std::string& format) {
    const std::vector<trivec::CheckResult> results = trivec::runSuite(suite);
    int failed = 0;
    for (const trivec::CheckResult& r : results)
        if (!r.passed) ++failed;

    if (format == "json") {
        Json rows = Json::array();
        for (const trivec::CheckResult& r : results) {
            Json row;
            row["id"] = r.id;
            row["suite"] = r.suite;
            row["passed"] = r.passed;
            if (!r.passed) row["message"] = r.message;
            rows.push_back(std::move(row));
        }
        std::cout << rows.dump() << '\n';
    } else {
        for (const trivec::CheckResult& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " [" << r.suite << ']';
            if (!r.passed) std::cout << " - " << r.message;
            std::cout << '\n';
        }
        std::cout << "passed " << (results.size() - failed) << " of " << results.size()
                  << " checks\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "trivec: exact character, Bott cohomology, quiver, and local-cohomology calculations"};
    app.require_subcommand(1);

    int exitCode = 0;

    // bott: the answer is a single JSON object, so text and json coincide.
    auto* bott = app.add_subcommand("bott", "Borel-Weil-Bott cohomology of S_alpha(Q) (x) S_beta(R)");
    std::vector<int> alpha, beta;
    int bottK = 3, bottN = 6;
    std::string bottFormat = "json";
    bott->add_option("--alpha", alpha, "quotient-side weight, comma separated (length n-k)")
        ->required()
        ->delimiter(',');
    bott->add_option("--beta", beta, "sub-side weight, comma separated (length k)")
        ->required()
        ->delimiter(',');
    bott->add_option("--k", bottK, "Grassmannian subspace dimension (default 3)");
    bott->add_option("--n", bottN, "ambient dimension (default 6)");
    bott->add_option("--format", bottFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    bott->callback([&] { exitCode = runBott(alpha, beta, bottK, bottN); });

    auto* charCmd = app.add_subcommand("char", "expand a named character on a truncation window");
    std::string charName;
    std::optional<long long> minDeg, maxDeg;
    std::optional<int> minEntry, maxEntry;
    std::vector<int> weightArg;
    std::string charFormat = "text";
    charCmd->add_option("--name", charName, "S, E, Sf, SfSqrt, B4, D1, D2, or D3")->required();
    charCmd->add_option("--min-deg", minDeg, "window minimum degree");
    charCmd->add_option("--max-deg", maxDeg, "window maximum degree");
    charCmd->add_option("--min-entry", minEntry, "entry lower bound (default: min-deg/6 - 9)");
    charCmd->add_option("--max-entry", maxEntry, "entry upper bound (default: max-deg/6 + 9)");
    charCmd
        ->add_option("--weight", weightArg,
                     "probe one weight; use --weight=-3,-3,... for negative entries")
        ->delimiter(',');
    charCmd->add_option("--format", charFormat, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    charCmd->callback([&] {
        exitCode = runChar(charName, minDeg, maxDeg, minEntry, maxEntry, weightArg, charFormat);
    });

    auto* plethysm = app.add_subcommand("plethysm", "Schur decomposition of an exterior power");
    int wedge = 7;
    std::string plethysmOf = "wedge3";
    std::string plethysmFormat = "text";
    plethysm->add_option("--wedge", wedge, "exterior power to take (default 7)");
    plethysm->add_option("--of", plethysmOf, "base representation (only wedge3)");
    plethysm->add_option("--format", plethysmFormat, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    plethysm->callback([&] { exitCode = runPlethysm(wedge, plethysmOf, plethysmFormat); });

    auto* grScan = app.add_subcommand("gr-scan", "graded eta-complex cohomology scan");
    int scanX = 0, scanK = 0;
    std::string scanFormat = "text";
    grScan->add_option("--x", scanX, "twist, one of -5, -6, -8")
        ->required()
        ->check(CLI::IsMember({-5, -6, -8}));
    grScan->add_option("--k", scanK, "symmetric-power cutoff")
        ->required()
        ->check(CLI::NonNegativeNumber);
    grScan->add_option("--format", scanFormat, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    grScan->callback([&] { exitCode = runGrScan(scanX, scanK, scanFormat); });

    auto* quiver = app.add_subcommand("quiver", "path algebra and module calculations");
    quiver->require_subcommand(1);
    std::string quiverFormat = "text";
    std::string vertexArg;
    auto* paths = quiver->add_subcommand("paths", "basis of paths avoiding the relations");
    paths->add_option("--format", quiverFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    paths->callback([&] { exitCode = runQuiverPaths(quiverFormat); });
    auto* proj = quiver->add_subcommand("proj", "projective cover of a vertex simple");
    proj->add_option("vertex", vertexArg, "one of s, d3, e, b4, d2, d1")->required();
    proj->add_option("--format", quiverFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    proj->callback([&] {
        exitCode = runQuiverRep(trivec::projectiveCover(trivec::parseVertex(vertexArg)), quiverFormat);
    });
    auto* inj = quiver->add_subcommand("inj", "injective envelope of a vertex simple");
    inj->add_option("vertex", vertexArg, "one of s, d3, e, b4, d2, d1")->required();
    inj->add_option("--format", quiverFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    inj->callback([&] {
        exitCode =
            runQuiverRep(trivec::injectiveEnvelope(trivec::parseVertex(vertexArg)), quiverFormat);
    });
    auto* indec = quiver->add_subcommand("indecomposables", "all indecomposable modules");
    indec->add_option("--format", quiverFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    indec->callback([&] { exitCode = runQuiverIndecomposables(quiverFormat); });

    auto* loccoh = app.add_subcommand("loccoh", "local cohomology table of a module along an orbit");
    std::string source, support;
    std::string loccohFormat = "text";
    loccoh->add_option("--source", source, "S, E, D1, D2, D3, B4, Sf, SfSqrt, Df1, or Df52")
        ->required();
    loccoh->add_option("--support", support, "orbit closure O0..O4")->required();
    loccoh->add_option("--format", loccohFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    loccoh->callback([&] { exitCode = runLocCoh(source, support, loccohFormat); });

    auto* lyubeznik = app.add_subcommand("lyubeznik", "Lyubeznik number table of an orbit closure");
    std::string orbit;
    std::string lyubeznikFormat = "csv";
    lyubeznik->add_option("--orbit", orbit, "O1, O2, or O3")->required();
    lyubeznik->add_option("--format", lyubeznikFormat, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    lyubeznik->callback([&] {
        exitCode = runLyubeznik(orbit, lyubeznikFormat == "text" ? "csv" : lyubeznikFormat);
    });

    auto* ssCheckCmd = app.add_subcommand("ss-check", "consistency of a spectral-sequence grid");
    std::string gridPath;
    std::string ssFormat = "text";
    ssCheckCmd->add_option("--grid", gridPath, "path to a grid JSON file")->required();
    ssCheckCmd->add_option("--format", ssFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    ssCheckCmd->callback([&] { exitCode = runSsCheck(gridPath, ssFormat); });

    auto* verify = app.add_subcommand("verify", "run a named check suite");
    std::string suite;
    std::string verifyFormat = "text";
    verify->add_option("--suite", suite, "characters, bott, quiver, loccoh, or all")->required();
    verify->add_option("--format", verifyFormat, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] { exitCode = runVerify(suite, verifyFormat); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const trivec::WindowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exitCode;
}
