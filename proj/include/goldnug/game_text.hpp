#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "goldnug/game.hpp"

namespace goldnug {

/// Fully braced text form. Ids registered as canonical numbers print as
/// "p" or "p/q"; everything else prints as {L1,L2|R1,R2}.
inline std::string to_text(const Universe& u, GameId g) {
    if (auto x = u.known_number(g)) return x->to_string();
    const GameRecord& rec = u.record(g);
    std::string out = "{";
    for (std::size_t i = 0; i < rec.left.size(); ++i) {
        if (i) out += ',';
        out += to_text(u, rec.left[i]);
    }
    out += '|';
    for (std::size_t i = 0; i < rec.right.size(); ++i) {
        if (i) out += ',';
        out += to_text(u, rec.right[i]);
    }
    out += '}';
    return out;
}

class parse_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Top-level token inside one brace group: an atom (number literal or a
// nested brace group), a comma, or a run of k bars.
struct TextToken {
    enum Kind { Atom, Comma, Bars } kind;
    std::string_view text;
    int bars = 0;
};

class GameParser {
public:
    GameParser(Universe& u, std::string_view src) : u_(u), src_(src) {}

    GameId parse() {
        std::vector<GameId> items = parse_list_or_game(strip(src_));
        if (items.size() != 1) fail("expected a single game");
        return items.front();
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw parse_error("cannot parse game '" + std::string(src_) + "': " + why);
    }

    static std::string_view strip(std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    }

    std::vector<TextToken> tokenize(std::string_view s) const {
        std::vector<TextToken> out;
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == ',') {
                out.push_back({TextToken::Comma, s.substr(i, 1)});
                ++i;
            } else if (c == '|') {
                std::size_t j = i;
                while (j < s.size() && s[j] == '|') ++j;
                out.push_back({TextToken::Bars, s.substr(i, j - i), static_cast<int>(j - i)});
                i = j;
            } else if (c == '{') {
                int depth = 0;
                std::size_t j = i;
                for (; j < s.size(); ++j) {
                    if (s[j] == '{') ++depth;
                    if (s[j] == '}' && --depth == 0) break;
                }
                if (j == s.size()) fail("unbalanced braces");
                out.push_back({TextToken::Atom, s.substr(i, j - i + 1)});
                i = j + 1;
            } else if (c == '}') {
                fail("unexpected '}'");
            } else {
                std::size_t j = i;
                while (j < s.size() && s[j] != ',' && s[j] != '|' && s[j] != '{' && s[j] != '}' &&
                       !std::isspace(static_cast<unsigned char>(s[j])))
                    ++j;
                out.push_back({TextToken::Atom, s.substr(i, j - i)});
                i = j;
            }
        }
        return out;
    }

    GameId parse_atom(std::string_view a) {
        if (a.front() == '{') {
            if (a.back() != '}') fail("unbalanced braces");
            std::string_view inner = a.substr(1, a.size() - 2);
            auto toks = tokenize(inner);
            bool has_bar = false;
            for (const auto& t : toks) has_bar |= t.kind == TextToken::Bars;
            if (!has_bar) fail("brace group without '|'");
            return build_game(toks);
        }
        try {
            return u_.from_number(Dyadic::parse(a));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    // Tokens contain at least one bar run: split at the unique run of
    // highest rank, sides are lists or (if they still contain bars)
    // single games.
    GameId build_game(const std::vector<TextToken>& toks) {
        int top = 0;
        std::size_t at = 0;
        int count = 0;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (toks[i].kind != TextToken::Bars) continue;
            if (toks[i].bars > top) {
                top = toks[i].bars;
                at = i;
                count = 1;
            } else if (toks[i].bars == top) {
                ++count;
            }
        }
        if (count != 1) fail("ambiguous bars");
        std::vector<TextToken> lhs(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(at));
        std::vector<TextToken> rhs(toks.begin() + static_cast<std::ptrdiff_t>(at) + 1, toks.end());
        return u_.make_game(side(lhs), side(rhs));
    }

    std::vector<GameId> side(const std::vector<TextToken>& toks) {
        bool has_bar = false;
        for (const auto& t : toks) has_bar |= t.kind == TextToken::Bars;
        if (has_bar) return {build_game(toks)};
        std::vector<GameId> out;
        bool expect_atom = true;
        for (const auto& t : toks) {
            if (t.kind == TextToken::Comma) {
                if (expect_atom) fail("empty list element");
                expect_atom = true;
            } else {
                if (!expect_atom) fail("missing ','");
                out.push_back(parse_atom(t.text));
                expect_atom = false;
            }
        }
        if (!out.empty() && expect_atom) fail("trailing ','");
        return out;
    }

    std::vector<GameId> parse_list_or_game(std::string_view s) {
        if (s.empty()) fail("empty input");
        return side(tokenize(s));
    }

    Universe& u_;
    std::string_view src_;
};

}  // namespace detail

/// Parses the text produced by to_text, plus the slash-rank shorthand
/// where "{1||1|0}" means {1|{1|0}} (more bars bind looser).
inline GameId parse_game(Universe& u, std::string_view text) { return detail::GameParser(u, text).parse(); }

}  // namespace goldnug
