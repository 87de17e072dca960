#include "qmzv/qstirling.hpp"

namespace qmzv {

QPoint parse_qpoint(const std::string& text) {
    if (text == "symbolic" || text == "q") return SymbolicQ{};
    constexpr std::string_view prefix = "zeta:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string rest = text.substr(prefix.size());
        unsigned long n = 0;
        try {
            std::size_t used = 0;
            n = std::stoul(rest, &used);
            if (used != rest.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("bad root-of-unity order in q point: " + text);
        }
        if (n < 1) throw ParseError("root-of-unity order must be >= 1");
        return RootOfUnityQ{CycloCtx::make(static_cast<unsigned>(n))};
    }
    return RationalQ{Rat::parse(text)};
}

std::string describe(const QPoint& q) {
    return std::visit(
        [](const auto& p) -> std::string {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, SymbolicQ>) return "symbolic";
            else if constexpr (std::is_same_v<P, RationalQ>) return p.value.to_string();
            else return "zeta:" + std::to_string(p.ctx->n());
        },
        q);
}

Rat rstirling1(unsigned n, unsigned k, unsigned r) { return stirling1(n, k, r, 1U, Rat(1)); }

}  // namespace qmzv
