#pragma once

// Named verification checks with stable string IDs, grouped into suites.
// Each check re-runs a complete calculation from scratch and compares it
// against the expected exact values; checks with a performance claim carry
// a wall-clock budget and fail when they exceed it. The acceptance binary
// and the `verify` subcommand both run this registry.

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trivec/bott.hpp"
#include "trivec/charseries.hpp"
#include "trivec/dmodcat.hpp"
#include "trivec/f2census.hpp"
#include "trivec/quiverrep.hpp"
#include "trivec/schur.hpp"
#include "trivec/weights.hpp"

namespace trivec {

struct CheckResult {
    std::string id;
    std::string suite;
    bool passed = false;
    double millis = 0.0;
    double limitMillis = 0.0;  // 0 means untimed
    std::string message;       // failure detail, or optional success note
};

struct NamedCheck {
    std::string id;
    std::string suite;
    double limitMillis = 0.0;
    // Returns an empty string on success, a failure description otherwise.
    std::function<std::string()> body;
};

namespace detail {

// --- check bodies ----------------------------------------------------------

inline std::string checkLocO1Betti() {
    const std::vector<long long> want = {1, 0, 1, 0, 2, 0, 3, 0, 3, 0,
                                         3, 0, 3, 0, 2, 0, 1, 0, 1};
    const std::vector<long long> got = gaussianBinomial(6, 3, 2);
    if (got != want) return "gaussianBinomial(6,3,2) differs from the expected 19 coefficients";
    return "";
}

inline std::string checkLocO1Cone() {
    const std::map<int, long long> h = coneLocalCohomologyFromBetti(gaussianBinomial(6, 3, 2));
    for (int j = 11; j <= 20; ++j) {
        const long long want = (j == 13 || j == 15) ? 1 : 0;
        const auto it = h.find(j);
        const long long got = it == h.end() ? 0 : it->second;
        if (got != want) {
            std::ostringstream msg;
            msg << "multiplicity at j=" << j << " is " << got << ", expected " << want;
            return msg.str();
        }
    }
    return "";
}

inline std::string checkPlethysmWedge7() {
    const LaurentSymPoly wedge3 = schurMonomials(Weight({1, 1, 1, 0, 0, 0}));
    const VirtualCharacter constituents = decomposeIntoSchur(exteriorPower(wedge3, 7));

    const std::vector<Weight> expected = {
        Weight({4, 4, 4, 3, 3, 3}), Weight({5, 4, 4, 4, 2, 2}), Weight({5, 5, 3, 3, 3, 2}),
        Weight({5, 5, 4, 4, 2, 1}), Weight({5, 5, 5, 3, 3, 0}), Weight({6, 4, 4, 3, 3, 1}),
        Weight({6, 4, 4, 4, 3, 0}), Weight({6, 5, 3, 3, 2, 2}), Weight({6, 5, 4, 3, 2, 1}),
        Weight({7, 4, 3, 3, 3, 1}), Weight({7, 4, 4, 2, 2, 2})};

    if (constituents.terms().size() != expected.size())
        return "expected 11 constituents, found " +
               std::to_string(constituents.terms().size());
    long long dimSum = 0;
    for (const Weight& w : expected) {
        if (constituents.multiplicity(w) != 1)
            return "constituent " + formatWeight(w) + " does not have multiplicity 1";
        dimSum += weylDim(w);
    }
    if (dimSum != 77520)
        return "dimension sum is " + std::to_string(dimSum) + ", expected 77520";
    return "";
}

inline std::string checkCharB4Overlap() {
    const TruncationWindow window = TruncationWindow::box(-45, -33, -12, 0);
    if (!b4OverlapCheck(window))
        return "a twisted wedge-power constituent appears in the character of B4";
    return "";
}

inline std::string checkCharB4Identity() {
    const TruncationWindow window = TruncationWindow::box(-36, 0, -24, 15);
    const VirtualCharacter viaFiltration = charB4ViaFiltration(window);
    const VirtualCharacter direct =
        shiftByConstant(namedCharacter(CharName::B4, window.shiftedByConstant(-3, 6)), 3);
    if (direct.terms().size() < 2000)
        return "comparison window is unexpectedly sparse (" +
               std::to_string(direct.terms().size()) + " weights)";
    if (!agreesOn(viaFiltration, direct, window))
        return "filtration expansion disagrees with the closed formula";
    return "";
}

inline std::string checkFourierPair() {
    const TruncationWindow sWindow(0, 36);
    const TruncationWindow eWindow(-96, -60);
    const VirtualCharacter s = namedCharacter(CharName::S, sWindow);
    const VirtualCharacter e = namedCharacter(CharName::E, eWindow);
    if (!agreesOn(fourier(s), e, eWindow))
        return "fourier of the coordinate-ring character differs from the E character";
    return "";
}

inline std::string checkCharSfComposition() {
    const TruncationWindow window = TruncationWindow::box(-72, 12, -12, 2);
    const VirtualCharacter sf = namedCharacter(CharName::Sf, window);
    const VirtualCharacter s = namedCharacter(CharName::S, window);
    const VirtualCharacter d3 = namedCharacter(CharName::D3, window);
    const VirtualCharacter e = namedCharacter(CharName::E, window);
    if (!agreesOn(sf, s + d3 + e, window)) return "[Sf] != [S] + [D3] + [E] on the window";

    const VirtualCharacter sfSqrt = namedCharacter(CharName::SfSqrt, window);
    const VirtualCharacter b4 = namedCharacter(CharName::B4, window);
    const VirtualCharacter d2 = namedCharacter(CharName::D2, window);
    const VirtualCharacter d1 = namedCharacter(CharName::D1, window);
    if (!agreesOn(sfSqrt, b4 + d2 + d1, window))
        return "[SfSqrt] != [B4] + [D2] + [D1] on the window";

    if (!d3.isEffective()) return "[D3] has a negative coefficient";
    if (!e.isEffective()) return "[E] has a negative coefficient";
    if (!d2.isEffective()) return "[D2] has a negative coefficient";
    if (!d1.isEffective()) return "[D1] has a negative coefficient";
    return "";
}

inline std::string checkWitnessWeights() {
    const std::vector<std::pair<CharName, Weight>> witnesses = {
        {CharName::D3, Weight::constant(6, -2)},
        {CharName::D2, Weight::constant(6, -5)},
        {CharName::D1, Weight::constant(6, -7)},
        {CharName::E, Weight::constant(6, -10)},
    };
    for (const auto& [name, w] : witnesses)
        for (const auto& [probeName, probe] : witnesses) {
            const long long got =
                namedCharacter(name, TruncationWindow::around(probe)).multiplicity(probe);
            const long long want = name == probeName ? 1 : 0;
            if (got != want) {
                std::ostringstream msg;
                msg << "multiplicity of " << formatWeight(probe) << " in ["
                    << to_string(name) << "] is " << got << ", expected " << want;
                return msg.str();
            }
        }
    return "";
}

inline std::string checkBottGrScan() {
    // Universal hit lists: each triplet appears at degree a+b+c once k clears
    // its threshold.
    struct UniversalHit {
        std::array<int, 3> triplet;
        int threshold;
    };
    const std::map<int, std::vector<UniversalHit>> universal = {
        {-5,
         {{{0, 0, 0}, 5}, {{1, 0, 0}, 5}, {{2, 1, 0}, 5}, {{2, 2, 0}, 5}, {{3, 1, 1}, 4}}},
        {-8,
         {{{0, 0, 0}, 8},
          {{1, 0, 0}, 8},
          {{2, 1, 0}, 8},
          {{2, 2, 0}, 8},
          {{3, 1, 1}, 7},
          {{3, 2, 1}, 7},
          {{3, 3, 2}, 6}}},
    };
    for (const auto& [x, hits] : universal)
        for (int k = 0; k <= 12; ++k) {
            GrScanTable expected;
            for (const UniversalHit& h : hits)
                if (k >= h.threshold)
                    expected[h.triplet[0] + h.triplet[1] + h.triplet[2]].push_back(h.triplet);
            if (grEtaScan(x, k) != expected) {
                std::ostringstream msg;
                msg << "scan table at x=" << x << ", k=" << k << " differs from the stored one";
                return msg.str();
            }
        }

    // The twist -6 scan contributes one dimension in degrees 5 and 6 once
    // k >= 5.
    for (int k = 5; k <= 12; ++k) {
        const GrScanTable t = grEtaScan(-6, k);
        for (int degree : {5, 6}) {
            const auto it = t.find(degree);
            const std::size_t count = it == t.end() ? 0 : it->second.size();
            if (count != 1) {
                std::ostringstream msg;
                msg << "scan at x=-6, k=" << k << " has " << count << " hits in degree "
                    << degree << ", expected 1";
                return msg.str();
            }
        }
    }
    return "";
}

inline std::string checkQuiverStructure() {
    if (pathBasis(theQuiver()).size() != 18)
        return "path basis has " + std::to_string(pathBasis(theQuiver()).size()) +
               " elements, expected 18";
    if (!isIsomorphic(injectiveEnvelope(Vertex::s), moduleSf()))
        return "injectiveEnvelope(s) is not isomorphic to moduleSf()";
    if (!isIsomorphic(injectiveEnvelope(Vertex::b4), moduleSfSqrt()))
        return "injectiveEnvelope(b4) is not isomorphic to moduleSfSqrt()";
    if (ext1Dim(simpleRep(Vertex::d3), simpleRep(Vertex::d2)) != 0)
        return "ext1Dim(d3, d2) is nonzero";
    if (ext1Dim(simpleRep(Vertex::d2), simpleRep(Vertex::d3)) != 0)
        return "ext1Dim(d2, d3) is nonzero";

    // Group the library's indecomposables per component by dimension vector
    // and compare against the live brute-force orbit census over F_2 for
    // every dimension vector at most (2,2,2).
    const std::array<std::array<Vertex, 3>, 2> components = {
        std::array<Vertex, 3>{Vertex::s, Vertex::d3, Vertex::e},
        std::array<Vertex, 3>{Vertex::b4, Vertex::d2, Vertex::d1}};
    const std::vector<QuiverRep> indecs = enumerateIndecomposables(theQuiver());
    for (int component = 0; component < 2; ++component) {
        const auto& mine = components[component];
        const auto& other = components[1 - component];
        std::map<std::array<int, 3>, int> libraryCounts;
        for (const QuiverRep& r : indecs) {
            bool supportedHere = true;
            for (Vertex v : other)
                if (r.dimAt(v) != 0) supportedHere = false;
            if (!supportedHere) continue;
            libraryCounts[{r.dimAt(mine[0]), r.dimAt(mine[1]), r.dimAt(mine[2])}] += 1;
        }
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c) {
                    if (a + b + c == 0) continue;
                    const std::array<int, 3> dims = {a, b, c};
                    const int oracle = f2census::indecomposableCount(dims);
                    const auto it = libraryCounts.find(dims);
                    const int mineCount = it == libraryCounts.end() ? 0 : it->second;
                    if (oracle != mineCount) {
                        std::ostringstream msg;
                        msg << "component " << component << " has " << mineCount
                            << " indecomposables of dims (" << a << "," << b << "," << c
                            << "), oracle says " << oracle;
                        return msg.str();
                    }
                }
    }
    return "";
}

inline std::string checkSsSolver() {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();
    const LocCohTable d1 = deriveLocCohD1AtO0ViaSS();
    const double ms1 =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t0)
            .count();
    if (d1 != locCohTable(SourceName::D1, OrbitLabel::O0))
        return "solver result for the origin rows of D1 differs from the stored table";
    if (ms1 >= 10000.0) return "D1 derivation took " + std::to_string(ms1) + " ms";

    const auto t1 = Clock::now();
    const LocCohTable d2 = deriveLocCohD2AtO1ViaSS();
    const double ms2 =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t1)
            .count();
    if (d2 != locCohTable(SourceName::D2, OrbitLabel::O1))
        return "solver result for the O1 rows of D2 differs from the stored table";
    if (ms2 >= 10000.0) return "D2 derivation took " + std::to_string(ms2) + " ms";
    return "";
}

inline std::string checkLyubeznikTables() {
    using LTable = std::map<std::pair<int, int>, long long>;
    const LTable wantO1 = {
        {{0, 5}, 1}, {{0, 7}, 1}, {{4, 10}, 1}, {{6, 10}, 1}, {{10, 10}, 1}};
    if (lyubeznikTable(OrbitLabel::O1) != wantO1) return "table for O1 differs";
    const LTable wantO2 = {{{0, 10}, 1}, {{4, 13}, 1},  {{6, 13}, 1}, {{10, 13}, 1},
                           {{9, 15}, 1}, {{13, 15}, 1}, {{15, 15}, 1}};
    if (lyubeznikTable(OrbitLabel::O2) != wantO2) return "table for O2 differs";
    if (lyubeznikTableViaIteration(OrbitLabel::O1) != wantO1)
        return "re-derivation through iterated local cohomology differs for O1";
    return "";
}

inline std::string checkFourierCharCycle() {
    for (SimpleLabel l : allSimpleLabels) {
        const SimpleInfo& info = simplesCatalog().at(l);
        const SimpleInfo& partner = simplesCatalog().at(info.fourierPartner);
        if (fourierOnCharCycle(info.charCycle) != partner.charCycle)
            return "characteristic cycle of " + to_string(l) +
                   " does not map onto that of " + to_string(info.fourierPartner);
    }
    return "";
}

}  // namespace detail

/// The registry, in acceptance-criterion order.
inline const std::vector<NamedCheck>& allChecks() {
    static const std::vector<NamedCheck> checks = {
        {"locO1.betti", "bott", 1.0, detail::checkLocO1Betti},
        {"locO1.cone", "bott", 1.0, detail::checkLocO1Cone},
        {"plethysm.wedge7", "characters", 10000.0, detail::checkPlethysmWedge7},
        {"charB4.overlap", "characters", 5000.0, detail::checkCharB4Overlap},
        {"charB4.identity", "characters", 30000.0, detail::checkCharB4Identity},
        {"fourier.pair", "characters", 30000.0, detail::checkFourierPair},
        {"charSf.composition", "characters", 60000.0, detail::checkCharSfComposition},
        {"witness.weights", "characters", 0.0, detail::checkWitnessWeights},
        {"bott.grscan", "bott", 5000.0, detail::checkBottGrScan},
        {"quiver.structure", "quiver", 10000.0, detail::checkQuiverStructure},
        {"ss.solver", "loccoh", 20000.0, detail::checkSsSolver},
        {"lyubeznik.tables", "loccoh", 0.0, detail::checkLyubeznikTables},
        {"fourier.charcycle", "loccoh", 0.0, detail::checkFourierCharCycle},
    };
    return checks;
}

inline const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names = {"characters", "bott", "quiver", "loccoh"};
    return names;
}

/// Run one check, timing it and applying its budget.
inline CheckResult runCheck(const NamedCheck& check) {
    CheckResult result;
    result.id = check.id;
    result.suite = check.suite;
    result.limitMillis = check.limitMillis;
    const auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        failure = check.body();
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    result.millis = std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (!failure.empty()) {
        result.message = failure;
        return result;
    }
    if (check.limitMillis > 0.0 && result.millis >= check.limitMillis) {
        std::ostringstream msg;
        msg << "exceeded time budget: " << result.millis << " ms >= " << check.limitMillis
            << " ms";
        result.message = msg.str();
        return result;
    }
    result.passed = true;
    return result;
}

/// Run a named suite ("characters", "bott", "quiver", "loccoh") or "all",
/// in registry order.
inline std::vector<CheckResult> runSuite(const std::string& suite) {
    if (suite != "all") {
        bool known = false;
        for (const std::string& name : suiteNames())
            if (name == suite) known = true;
        if (!known) throw std::invalid_argument("runSuite: unknown suite '" + suite + "'");
    }
    std::vector<CheckResult> results;
    for (const NamedCheck& check : allChecks())
        if (suite == "all" || check.suite == suite) results.push_back(runCheck(check));
    return results;
}

}  // namespace trivec
