#pragma once

// Exterior algebra over Z on generators g_1, g_2, ...: a basis monomial is a
// strictly increasing index list, the empty list being the unit.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "integer.hpp"

namespace kops {

class Exterior {
public:
    using Word = std::vector<std::uint32_t>;

    Exterior() = default;
    Exterior(Int c) { add(Word{}, std::move(c)); }
    Exterior(int c) : Exterior(Int(c)) {}

    static Exterior generator(std::uint32_t i)
    {
        Exterior e;
        e.add(Word{i}, 1);
        return e;
    }

    /// Any index sequence; sorted with the transposition sign, zero on repeats.
    static Exterior word(Word w, Int c = 1)
    {
        Exterior e;
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
                if (w[j] > w[j + 1]) {
                    std::swap(w[j], w[j + 1]);
                    sign = -sign;
                }
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == w[i - 1]) return e;
        e.add(w, sign * c);
        return e;
    }

    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int unit_part() const { return coefficient(Word{}); }

    std::uint32_t max_index() const
    {
        std::uint32_t k = 0;
        for (const auto& [w, c] : terms_)
            if (!w.empty()) k = std::max(k, w.back());
        return k;
    }

    void add(const Word& w, const Int& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Exterior& operator+=(const Exterior& o)
    {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    Exterior& operator-=(const Exterior& o)
    {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
    friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
    friend Exterior operator-(Exterior a)
    {
        for (auto& [w, c] : a.terms_) c = -c;
        return a;
    }
    friend Exterior operator*(const Int& k, Exterior a)
    {
        if (k == 0) return {};
        for (auto& [w, c] : a.terms_) c *= k;
        return a;
    }

    /// Wedge product.
    friend Exterior operator*(const Exterior& a, const Exterior& b)
    {
        Exterior out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out += word(std::move(w), ca * cb);
            }
        return out;
    }

    bool operator==(const Exterior&) const = default;

    /// Algebra map determined by generator images (which should be odd).
    template <class Image>
    Exterior map(Image&& image) const
    {
        Exterior out;
        for (const auto& [w, c] : terms_) {
            Exterior t(c);
            for (auto i : w) t = t * image(i);
            out += t;
        }
        return out;
    }

    /// "2*l1∧l3 - l4"; `name` is the generator prefix.
    std::string to_text(const std::string& name) const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            Int mag = c < 0 ? Int(-c) : c;
            s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            if (w.empty()) {
                s += mag.str();
                continue;
            }
            if (mag != 1) s += mag.str() + "*";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) s += "∧";
                s += name + std::to_string(w[i]);
            }
        }
        return s;
    }

    nlohmann::json to_json(const std::string& name) const
    {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [w, c] : terms_) {
            nlohmann::json mono = nlohmann::json::array();
            for (auto i : w) mono.push_back({name, i, 1});
            terms.push_back({{"coeff", c.str()}, {"monomial", mono}});
        }
        return {{"terms", terms}};
    }

private:
    std::map<Word, Int> terms_;
};

} // namespace kops
