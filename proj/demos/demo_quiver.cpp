// Tour of the quiver model: the path-algebra basis, projective covers and
// injective envelopes, the two distinguished infinite filtration modules,
// and the complete list of indecomposables.

#include <iostream>

#include "trivec/quiverrep.hpp"

using namespace trivec;

namespace {

void printDims(const char* label, const QuiverRep& r) {
    std::cout << "  " << label << ':';
    for (Vertex v : allVertices) std::cout << ' ' << to_string(v) << '=' << r.dims.at(v);
    std::cout << '\n';
}

}  // namespace

int main() {
    const QuiverPresentation& q = theQuiver();
    std::cout << "quiver: " << q.vertices.size() << " vertices, " << q.arrows.size()
              << " arrows, relations kill all 2-cycles and unmatched compositions\n\n";

    const std::vector<Path> basis = pathBasis(q);
    std::cout << "path-algebra basis (" << basis.size() << " paths):\n";
    for (const Path& p : basis) std::cout << "  " << formatPath(p) << '\n';

    std::cout << "\nprojective covers / injective envelopes:\n";
    for (Vertex v : allVertices) {
        printDims(("P(" + to_string(v) + ")").c_str(), projectiveCover(v));
        printDims(("I(" + to_string(v) + ")").c_str(), injectiveEnvelope(v));
    }

    std::cout << "\nfiltration modules of the localizations:\n";
    printDims("Sf      ", moduleSf());
    printDims("Sf.sqrt ", moduleSfSqrt());
    std::cout << "  I(s) ~ Sf:        " << (isIsomorphic(injectiveEnvelope(Vertex::s), moduleSf()) ? "yes" : "no")
              << '\n';
    std::cout << "  I(b4) ~ Sf.sqrt:  "
              << (isIsomorphic(injectiveEnvelope(Vertex::b4), moduleSfSqrt()) ? "yes" : "no")
              << '\n';

    std::cout << "\nExt^1 between vertex simples (rows = first argument):\n    ";
    for (Vertex w : allVertices) std::cout << ' ' << to_string(w);
    std::cout << '\n';
    for (Vertex v : allVertices) {
        std::cout << "  " << to_string(v) << (to_string(v).size() == 1 ? "  " : " ");
        for (Vertex w : allVertices)
            std::cout << ' ' << ext1Dim(simpleRep(v), simpleRep(w))
                      << std::string(to_string(w).size() - 1, ' ');
        std::cout << '\n';
    }

    const std::vector<QuiverRep> indecs = enumerateIndecomposables(q);
    std::cout << "\nindecomposable modules (" << indecs.size() << " total):\n";
    for (const QuiverRep& m : indecs) printDims("dims", m);
    return 0;
}
