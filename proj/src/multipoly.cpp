#include "ellcob/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace ellcob {

namespace {

// One product of factors separated by '*': a rational and/or name^exp parts.
MultiPoly parse_term(const Ctx& ctx, const std::string& term) {
    Rational coeff(1);
    MultiPoly::Exponents e(ctx->size(), 0);
    std::string piece;
    std::stringstream ss(term);
    while (std::getline(ss, piece, '*')) {
        if (piece.empty()) throw std::invalid_argument("parse: empty factor in " + term);
        if (std::isdigit(static_cast<unsigned char>(piece[0])) || piece[0] == '-' ||
            piece[0] == '+') {
            coeff *= Rational::from_string(piece);
            continue;
        }
        std::string name = piece;
        int expo = 1;
        auto caret = piece.find('^');
        if (caret != std::string::npos) {
            name = piece.substr(0, caret);
            expo = std::stoi(piece.substr(caret + 1));
        }
        int idx = ctx->index_of(name);
        if (idx < 0) throw ContextError("parse: unknown variable " + name);
        e[idx] += expo;
    }
    return MultiPoly::monomial(ctx, std::move(e), coeff);
}

}  // namespace

MultiPoly MultiPoly::from_string(const Ctx& ctx, const std::string& s) {
    MultiPoly out(ctx);
    if (s.empty() || s == "0") return out;
    // Terms are separated by " + " or " - "; a leading '-' binds to the
    // first term.
    std::size_t pos = 0;
    Rational sign(1);
    if (s[0] == '-') {
        sign = Rational(-1);
        pos = 1;
    }
    while (pos < s.size()) {
        std::size_t plus = s.find(" + ", pos);
        std::size_t minus = s.find(" - ", pos);
        std::size_t cut = std::min(plus, minus);
        std::string term = s.substr(pos, cut == std::string::npos ? cut : cut - pos);
        out += parse_term(ctx, term) * sign;
        if (cut == std::string::npos) break;
        sign = (cut == minus) ? Rational(-1) : Rational(1);
        pos = cut + 3;
    }
    return out;
}

}  // namespace ellcob
