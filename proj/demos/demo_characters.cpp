// Tour of the character calculus: expand the named characters on a shared
// truncation window, confirm the two composition-series identities, probe
// the witness weights, and exhibit the Fourier pairing.

#include <iostream>

#include "trivec/charseries.hpp"

using namespace trivec;

int main() {
    const TruncationWindow window = TruncationWindow::box(-72, 12, -12, 2);

    std::cout << "expanding characters on degrees [-72, 12], entries [-12, 2]\n\n";
    const VirtualCharacter s = namedCharacter(CharName::S, window);
    const VirtualCharacter e = namedCharacter(CharName::E, window);
    const VirtualCharacter sf = namedCharacter(CharName::Sf, window);
    const VirtualCharacter sfSqrt = namedCharacter(CharName::SfSqrt, window);
    const VirtualCharacter b4 = namedCharacter(CharName::B4, window);
    const VirtualCharacter d1 = namedCharacter(CharName::D1, window);
    const VirtualCharacter d2 = namedCharacter(CharName::D2, window);
    const VirtualCharacter d3 = namedCharacter(CharName::D3, window);

    std::cout << "support sizes: [S]=" << s.supportSize() << " [E]=" << e.supportSize()
              << " [Sf]=" << sf.supportSize() << " [Sf.sqrt(f)]=" << sfSqrt.supportSize()
              << " [B4]=" << b4.supportSize() << "\n\n";

    std::cout << "composition series of the localization:\n";
    std::cout << "  [Sf]        = [S] + [D3] + [E]   -> "
              << (agreesOn(sf, s + d3 + e, window) ? "holds" : "FAILS") << '\n';
    std::cout << "  [Sf.sqrt(f)] = [B4] + [D2] + [D1] -> "
              << (agreesOn(sfSqrt, b4 + d2 + d1, window) ? "holds" : "FAILS") << "\n\n";

    std::cout << "witness weights (multiplicity of (c,...,c) in each simple):\n";
    const std::vector<std::pair<CharName, int>> witnesses = {
        {CharName::D3, -2}, {CharName::D2, -5}, {CharName::D1, -7}, {CharName::E, -10}};
    for (const auto& [name, c] : witnesses) {
        std::cout << "  c=" << c << ':';
        const Weight probe = Weight::constant(6, c);
        for (const auto& [other, unused] : witnesses)
            std::cout << " [" << to_string(other)
                      << "]=" << namedCharacter(other, TruncationWindow::around(probe))
                             .multiplicity(probe);
        std::cout << '\n';
    }

    std::cout << "\nFourier transform pairs [S] with [E]:\n";
    const TruncationWindow sWindow(0, 36);
    const VirtualCharacter sWide = namedCharacter(CharName::S, sWindow);
    const VirtualCharacter eWide = namedCharacter(CharName::E, sWindow.reflected().shiftedByConstant(-10, 6));
    std::cout << "  fourier([S]) == [E] on mirrored windows -> "
              << (agreesOn(fourier(sWide), eWide, eWide.window()) ? "holds" : "FAILS") << '\n';
    return 0;
}
