// Tour of the local-cohomology machinery: catalog tables, a spectral-sequence
// re-derivation of one of them from scratch, and the Lyubeznik tables the
// iterated composition produces.

#include <iostream>

#include "trivec/dmodcat.hpp"
#include "trivec/serialize.hpp"

using namespace trivec;

namespace {

void printTable(const LocCohTable& t) {
    std::cout << "  H^i_" << to_string(t.support) << '(' << to_string(t.source) << "):";
    if (t.rows.empty()) std::cout << " zero";
    for (const auto& [i, sum] : t.rows) {
        std::cout << "  " << i << " -> ";
        bool first = true;
        for (const auto& [label, mult] : sum.multiplicities) {
            if (!first) std::cout << '+';
            if (mult != 1) std::cout << mult << '*';
            std::cout << to_string(label);
            first = false;
        }
        if (t.nonsplit.count(i)) std::cout << " (nonsplit)";
    }
    std::cout << '\n';
}

}  // namespace

int main() {
    std::cout << "local cohomology of the coordinate ring along each orbit closure:\n";
    for (OrbitLabel z : {OrbitLabel::O3, OrbitLabel::O2, OrbitLabel::O1, OrbitLabel::O0})
        printTable(locCohTable(SourceName::S, z));

    std::cout << "\nre-deriving H_{O0}(D1) by spectral-sequence search:\n";
    const LocCohTable derived = deriveLocCohD1AtO0ViaSS();
    printTable(derived);
    std::cout << "  matches catalog: "
              << (derived == locCohTable(SourceName::D1, OrbitLabel::O0) ? "yes" : "no") << '\n';

    std::cout << "\nLyubeznik tables (nonzero lambda_{i,j}):\n";
    for (OrbitLabel z : {OrbitLabel::O1, OrbitLabel::O2, OrbitLabel::O3}) {
        std::cout << "  " << to_string(z) << ":\n";
        for (const auto& [pos, value] : lyubeznikTable(z))
            std::cout << "    lambda_{" << pos.first << ',' << pos.second << "} = " << value
                      << '\n';
    }

    std::cout << "\nFourier transform on characteristic cycles:\n";
    for (const auto& [label, info] : simplesCatalog()) {
        std::cout << "  " << to_string(label) << " {";
        bool first = true;
        for (OrbitLabel o : info.charCycle) {
            if (!first) std::cout << ',';
            std::cout << to_string(o);
            first = false;
        }
        std::cout << "} -> " << to_string(info.fourierPartner) << '\n';
    }
    return 0;
}
