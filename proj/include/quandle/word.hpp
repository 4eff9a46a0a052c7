#pragma once

#include "quandle/finite_quandle.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace quandle {

/// One right operand `*^sign generator` of a left-normed word, or one letter
/// e_generator^sign of a group word.
struct Letter {
    std::string generator;
    int sign = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// x0 *^e1 x1 *^e2 ... *^en xn, associated to the left.
struct QuandleWord {
    std::string head;
    std::vector<Letter> tail;
    /// Set by reduce(); not part of equality.
    bool reduced = false;

    QuandleWord() = default;
    QuandleWord(std::string h, std::vector<Letter> t = {}) :
        head(std::move(h)),
        tail(std::move(t))
    {
    }

    /// Number of generator occurrences, head included.
    std::size_t length() const noexcept { return tail.size() + 1; }
    /// Distinct generator names in order of first occurrence.
    std::vector<std::string> generators() const;

    friend bool operator==(const QuandleWord& a, const QuandleWord& b)
    {
        return a.head == b.head && a.tail == b.tail;
    }
    friend bool operator<(const QuandleWord& a, const QuandleWord& b)
    {
        if (a.head != b.head)
            return a.head < b.head;
        return a.tail < b.tail;
    }
};

/// Surface syntax: `a * b / c`.
std::string to_string(const QuandleWord& w);

/// An arbitrary binary term over generators with * (sign +1) and *^-1
/// (sign -1). Immutable; subterms are shared.
class Term {
public:
    static Term generator(std::string name);
    static Term apply(Term left, int sign, Term right);

    bool is_generator() const noexcept { return left_ == nullptr; }
    const std::string& name() const noexcept { return name_; }
    const Term& left() const { return *left_; }
    const Term& right() const { return *right_; }
    int sign() const noexcept { return sign_; }
    std::size_t depth() const;

private:
    std::string name_;
    std::shared_ptr<const Term> left_;
    std::shared_ptr<const Term> right_;
    int sign_ = 1;
};

std::string to_string(const Term& t);

/// Parses the surface grammar: identifiers [A-Za-z_][A-Za-z0-9_#]*, binary
/// `*` and `/` (left-associative, equal precedence), parentheses.
Term parse_term(std::string_view text);
/// parse_term followed by normalize_left_normed.
QuandleWord parse_word(std::string_view text);

/// Rewrites a term into an equivalent left-normed word by expanding every
/// compound right operand with x *^e (u *^f v) = ((x *^-f v) *^e u) *^f v.
QuandleWord normalize_left_normed(const Term& t);
/// The left-normed word read back as a term.
Term to_term(const QuandleWord& w);

/// Cancels adjacent inverse pairs in the tail and drops a leading letter
/// equal to the head until the word is in reduced form.
QuandleWord reduce(const QuandleWord& w);
bool is_reduced_form(const QuandleWord& w);

/// A freely reduced word in generators e_x.
class GroupWord {
public:
    GroupWord() = default;
    /// Freely reduces `letters`.
    explicit GroupWord(std::vector<Letter> letters);
    static GroupWord generator(std::string name, int sign = 1);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    GroupWord inverse() const;
    int exponent_sum() const;

    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord&, const GroupWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Letter coding: one space-separated token per letter, inverses written
/// with the ASCII case of every character swapped ("a B a0 A0").
std::string to_letter_code(const GroupWord& w);
/// Inverse of to_letter_code against a generator list. A token matching a
/// generator is positive; otherwise its case swap must match one.
GroupWord from_letter_code(std::string_view text, const std::vector<std::string>& generators);
std::string swap_case(std::string_view s);

/// c^-1 e_x0 c with c = e_x1^e1 ... e_xn^en, freely reduced.
GroupWord eta(const QuandleWord& w);

using Assignment = std::map<std::string, int>;

/// Left-to-right fold with the table (dual operation for sign -1).
int evaluate(const QuandleWord& w, const FiniteQuandle& q, const Assignment& assign);
int evaluate(const Term& t, const FiniteQuandle& q, const Assignment& assign);

} // namespace quandle
