#include "schubert/render.hpp"

#include <cctype>

namespace schubert {

std::string format_word(const WeylGroup& g, std::uint32_t index)
{
    auto word = g.word(index);
    if (word.empty())
        return "e";
    if (g.rank() == 1)
        return "s";
    std::string out;
    for (auto letter : word) {
        if (!out.empty())
            out += ' ';
        out += 's' + std::to_string(letter + 1);
    }
    return out;
}

std::string format_word(const WeylElement& w) { return format_word(w.group(), w.index()); }

WeylElement parse_word(const WeylGroup& g, std::string_view text)
{
    std::vector<int> letters;
    std::size_t k = 0;
    bool identity = false;
    auto fail = [&](const std::string& why) {
        throw ParseError("cannot parse Weyl group word \"" + std::string(text) + "\": " + why);
    };
    while (k < text.size()) {
        const char c = text[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
        } else if (c == 'e') {
            identity = true;
            ++k;
        } else if (c == 's') {
            ++k;
            std::size_t start = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                ++k;
            if (start == k) {
                if (g.rank() != 1)
                    fail("bare \"s\" is only allowed in rank 1");
                letters.push_back(0);
            } else {
                const int i = std::stoi(std::string(text.substr(start, k - start)));
                if (i < 1 || i > g.rank())
                    fail("s" + std::to_string(i) + " does not exist in " + g.name());
                letters.push_back(i - 1);
            }
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }
    if (identity && !letters.empty())
        fail("\"e\" cannot be combined with reflections");
    if (!identity && letters.empty())
        fail("empty word (use \"e\" for the identity)");
    return g.from_word(letters);
}

namespace {

std::string superscript(const std::string& word)
{
    return word.size() == 1 ? word : "{" + word + "}";
}

// Joins signed terms with " + " / " − " (U+2212).
std::string join_terms(const std::vector<std::pair<Int, std::string>>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [c, name] = terms[k];
        const Int mag = c < 0 ? -c : c;
        if (k == 0)
            out += c < 0 ? "−" : "";
        else
            out += c < 0 ? " − " : " + ";
        if (mag != 1)
            out += std::to_string(mag);
        out += name;
    }
    return out;
}

} // namespace

std::string format_class(const CohomologyClass& a, ClassBasis basis)
{
    const auto& g = a.group();
    std::vector<std::pair<Int, std::string>> terms;
    if (basis == ClassBasis::Epsilon) {
        for (const auto& [x, c] : a.terms())
            terms.emplace_back(c, "ε^" + superscript(format_word(g, x)));
    } else {
        // Order [X_w] by increasing l(w), i.e. epsilon^x by decreasing x.
        for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
            auto w = g.multiply(g.longest(), g.element(it->first));
            std::string word = format_word(w);
            terms.emplace_back(it->second, "[X_" + superscript(word) + "]");
        }
    }
    return join_terms(terms);
}

std::string format_combination(const WeylGroup& g, const SparseCoeffs& c, std::string_view prefix,
                               std::string_view suffix)
{
    std::vector<std::pair<Int, std::string>> terms;
    for (const auto& [w, k] : c)
        terms.emplace_back(k, std::string(prefix) + superscript(format_word(g, w)) + std::string(suffix));
    return join_terms(terms);
}

} // namespace schubert
