#pragma once

// One-line operand syntax:
//   operations  chi(d) id const(c) sum(..) prod(..) comp(f,g) identity L<k> l<k>
//   elements    integers, u, s, x<k>
// combined with + - * ⊗ ∧ ^ and parentheses. ⊗, ∧ and * are all the ring
// product and bind tighter than + and -; ^ takes a nonnegative integer.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "evenops.hpp"
#include "integer.hpp"
#include "intpoly.hpp"
#include "loopgrade.hpp"
#include "setzz.hpp"

namespace kops {

/// A parsed operation: an integer, an even operation or an odd operation.
using OpValue = std::variant<Int, EvenOp, OddOp>;

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool done()
    {
        skip_space();
        return pos_ >= src_.size();
    }
    bool accept(std::string_view tok)
    {
        skip_space();
        if (src_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok)
    {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    bool peek_digit()
    {
        skip_space();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }
    Int number()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Int(std::string(src_.substr(start, pos_ - start)));
    }
    Int signed_number()
    {
        bool neg = accept("-");
        Int n = number();
        return neg ? Int(-n) : n;
    }
    std::string word()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }
    /// Index directly after a letter, as in L3 or x2.
    std::uint32_t index()
    {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an index");
        return static_cast<std::uint32_t>(std::stoul(std::string(src_.substr(start, pos_ - start))));
    }
    std::uint32_t exponent()
    {
        Int e = number();
        if (e > 64) fail("exponent too large");
        return static_cast<std::uint32_t>(e);
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(src_) + "\"");
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

inline FnZZ parse_fn_call(Lexer& lx, const std::string& head)
{
    if (head == "id") return FnZZ::identity();
    lx.expect("(");
    FnZZ out = FnZZ::constant(0);
    if (head == "chi" || head == "const") {
        Int v = lx.signed_number();
        out = head == "chi" ? FnZZ::chi(v) : FnZZ::constant(v);
    } else {
        std::vector<FnZZ> args;
        do {
            args.push_back(parse_fn_call(lx, lx.word()));
        } while (lx.accept(","));
        if (head == "sum")
            out = FnZZ::sum(std::move(args));
        else if (head == "prod")
            out = FnZZ::product(std::move(args));
        else if (head == "comp" && args.size() == 2)
            out = fn_compose(args[0], args[1]);
        else
            lx.fail("unknown function form '" + head + "'");
    }
    lx.expect(")");
    return out;
}

class OpParser {
public:
    OpParser(std::string_view src, int trunc, Window window) : lx_(src), trunc_(trunc), window_(window) {}

    OpValue parse()
    {
        OpValue v = sum();
        if (!lx_.done()) lx_.fail("unexpected trailing input");
        return v;
    }

private:
    EvenOp even(const OpValue& v) const
    {
        if (auto* c = std::get_if<Int>(&v)) return EvenOp::tensor(FnZZ::constant(*c), KBUElem::one(trunc_), window_);
        return std::get<EvenOp>(v);
    }
    OddOp odd(const OpValue& v) const
    {
        if (auto* c = std::get_if<Int>(&v)) return OddOp(Exterior(*c), trunc_);
        return std::get<OddOp>(v);
    }
    static bool is_odd(const OpValue& v) { return std::holds_alternative<OddOp>(v); }
    static bool is_even(const OpValue& v) { return std::holds_alternative<EvenOp>(v); }

    OpValue add(const OpValue& a, const OpValue& b, bool negate)
    {
        const Int sign = negate ? -1 : 1;
        if (std::holds_alternative<Int>(a) && std::holds_alternative<Int>(b)) return std::get<Int>(a) + sign * std::get<Int>(b);
        if ((is_odd(a) && is_even(b)) || (is_even(a) && is_odd(b))) throw ParityMismatch("sum of an even and an odd operation");
        if (is_odd(a) || is_odd(b)) return odd(a) + sign * odd(b);
        return even(a) + sign * even(b);
    }
    OpValue mul(const OpValue& a, const OpValue& b)
    {
        if (std::holds_alternative<Int>(a) && std::holds_alternative<Int>(b)) return std::get<Int>(a) * std::get<Int>(b);
        if (auto* c = std::get_if<Int>(&a)) return is_odd(b) ? OpValue(*c * odd(b)) : OpValue(*c * even(b));
        if (auto* c = std::get_if<Int>(&b)) return is_odd(a) ? OpValue(*c * odd(a)) : OpValue(*c * even(a));
        if (is_odd(a) && is_odd(b)) return odd(a) * odd(b);
        if (is_even(a) && is_even(b)) return even(a) * even(b);
        throw ParityMismatch("product of an even and an odd operation");
    }

    OpValue sum()
    {
        OpValue v = lx_.accept("-") ? mul(Int(-1), product()) : product();
        for (;;) {
            if (lx_.accept("+"))
                v = add(v, product(), false);
            else if (lx_.accept("-"))
                v = add(v, product(), true);
            else
                return v;
        }
    }
    OpValue product()
    {
        OpValue v = power();
        while (lx_.accept("*") || lx_.accept("⊗") || lx_.accept("∧")) v = mul(v, power());
        return v;
    }
    OpValue power()
    {
        OpValue base = atom();
        if (!lx_.accept("^")) return base;
        std::uint32_t e = lx_.exponent();
        OpValue out = Int(1);
        for (std::uint32_t i = 0; i < e; ++i) out = mul(out, base);
        return out;
    }
    OpValue atom()
    {
        if (lx_.accept("(")) {
            OpValue v = sum();
            lx_.expect(")");
            return v;
        }
        if (lx_.peek_digit()) return lx_.number();
        const std::string w = lx_.word();
        if (w.empty()) lx_.fail("expected an operand");
        if (w == "identity") return identity_op(trunc_, window_);
        if (w == "L") return EvenOp::tensor(FnZZ::constant(1), KBUElem::generator(static_cast<int>(lx_.index()), trunc_), window_);
        if (w == "l") {
            const auto k = lx_.index();
            if (static_cast<int>(k) > trunc_) throw TruncationExceeded("l" + std::to_string(k) + " above level " + std::to_string(trunc_));
            return OddOp::generator(static_cast<int>(k), trunc_);
        }
        if (w == "id" || w == "chi" || w == "const" || w == "sum" || w == "prod" || w == "comp")
            return EvenOp::tensor(parse_fn_call(lx_, w), KBUElem::one(trunc_), window_);
        lx_.fail("unknown operand '" + w + "'");
    }

    Lexer lx_;
    int trunc_;
    Window window_;
};

class ElementParser {
public:
    explicit ElementParser(std::string_view src) : lx_(src) {}

    IntPoly parse()
    {
        IntPoly v = sum();
        if (!lx_.done()) lx_.fail("unexpected trailing input");
        return v;
    }

private:
    IntPoly sum()
    {
        IntPoly v = lx_.accept("-") ? -product() : product();
        for (;;) {
            if (lx_.accept("+"))
                v += product();
            else if (lx_.accept("-"))
                v -= product();
            else
                return v;
        }
    }
    IntPoly product()
    {
        IntPoly v = power();
        while (lx_.accept("*")) v *= power();
        return v;
    }
    IntPoly power()
    {
        IntPoly base = atom();
        return lx_.accept("^") ? pow(base, lx_.exponent()) : base;
    }
    IntPoly atom()
    {
        if (lx_.accept("(")) {
            IntPoly v = sum();
            lx_.expect(")");
            return v;
        }
        if (lx_.peek_digit()) return IntPoly(lx_.number());
        const std::string w = lx_.word();
        if (w == "u") return IntPoly::variable(var(Family::u, 1));
        if (w == "s") return IntPoly::variable(var(Family::s, 1));
        if (w == "x") return IntPoly::variable(var(Family::x, lx_.index()));
        lx_.fail(w.empty() ? "expected an element" : "unknown symbol '" + w + "'");
    }

    Lexer lx_;
};

} // namespace detail

inline OpValue parse_operation(std::string_view src, int trunc, Window window) { return detail::OpParser(src, trunc, window).parse(); }

inline IntPoly parse_element(std::string_view src) { return detail::ElementParser(src).parse(); }

/// Splits "a ∘ b" at its top-level ∘; empty second part when absent.
inline std::pair<std::string, std::string> split_composition(const std::string& src)
{
    static const std::string circ = "∘";
    int depth = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] == '(') ++depth;
        if (src[i] == ')') --depth;
        if (depth == 0 && src.compare(i, circ.size(), circ) == 0) return {src.substr(0, i), src.substr(i + circ.size())};
    }
    return {src, {}};
}

} // namespace kops
