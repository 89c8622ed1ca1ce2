#include "hedonica/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hedonica/errors.hpp"

namespace hedonica {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
    std::string_view rest_after_two;  // raw text after the first two tokens
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits a document into comment-stripped, nonblank tokenized lines.
std::vector<Line> tokenize(std::string_view document) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!document.empty() || number == 0) {
        ++number;
        const auto eol = document.find('\n');
        std::string_view raw = document.substr(0, eol);
        document = eol == std::string_view::npos ? std::string_view{} : document.substr(eol + 1);
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            const std::size_t start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            if (pos > start) {
                line.tokens.push_back(raw.substr(start, pos - start));
                if (line.tokens.size() == 2) line.rest_after_two = trim(raw.substr(pos));
            }
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (document.empty()) break;
    }
    return lines;
}

template <class Int>
Int parse_int(std::string_view token, std::size_t line, const char* what) {
    Int value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

void expect_arity(const Line& l, std::size_t min_tokens, const char* usage) {
    if (l.tokens.size() < min_tokens) throw ParseError(l.number, std::string("expected '") + usage + "'");
}

std::vector<std::int64_t> int_list(const Line& l, std::size_t from) {
    std::vector<std::int64_t> values;
    for (std::size_t k = from; k < l.tokens.size(); ++k) {
        values.push_back(parse_int<std::int64_t>(l.tokens[k], l.number, "an integer"));
    }
    return values;
}

}  // namespace

Game parse_game(std::string_view document) {
    const auto lines = tokenize(document);
    if (lines.empty()) throw ParseError(1, "empty game file; expected 'hedonic <n>'");
    const Line& header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0] != "hedonic") {
        throw ParseError(header.number, "expected header 'hedonic <n>'");
    }
    const int n = parse_int<int>(header.tokens[1], header.number, "a player count");
    if (n < 1) throw ParseError(header.number, "player count must be at least 1");

    std::vector<std::string> labels(static_cast<std::size_t>(n));
    bool any_label = false;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& l = lines[k];
        if (l.tokens[0] == "label") {
            expect_arity(l, 3, "label <i> <text>");
            const int i = parse_int<int>(l.tokens[1], l.number, "a player index");
            if (i < 1 || i > n) throw ParseError(l.number, "label index outside 1.." + std::to_string(n));
            if (!labels[i - 1].empty()) throw ParseError(l.number, "player " + std::to_string(i) + " labelled twice");
            labels[i - 1] = std::string(l.rest_after_two);
            any_label = true;
            continue;
        }
        if (rows.size() == static_cast<std::size_t>(n)) {
            throw ParseError(l.number, "more than " + std::to_string(n) + " matrix rows");
        }
        if (l.tokens.size() != static_cast<std::size_t>(n)) {
            throw ParseError(l.number, "row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                                           std::to_string(n));
        }
        const std::size_t r = rows.size();
        std::vector<Rational> row;
        row.reserve(l.tokens.size());
        for (std::size_t c = 0; c < l.tokens.size(); ++c) {
            if (c == r) {
                if (l.tokens[c] != "0") {
                    throw ParseError(l.number, "diagonal entry of row " + std::to_string(r + 1) + " must be 0, got '" +
                                                   std::string(l.tokens[c]) + "'");
                }
                row.emplace_back(0);
                continue;
            }
            try {
                row.push_back(Rational::parse(l.tokens[c]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(l.number, e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.size() != static_cast<std::size_t>(n)) {
        const std::size_t last = lines.back().number;
        throw ParseError(last, "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(rows.size()));
    }
    if (!any_label) labels.clear();
    return Game(std::move(rows), std::move(labels));
}

std::string serialize_game(const Game& g) {
    std::ostringstream out;
    out << "hedonic " << g.size() << '\n';
    for (Player i = 1; i <= g.size(); ++i) {
        if (!g.label(i).empty()) out << "label " << i << ' ' << g.label(i) << '\n';
    }
    for (Player i = 1; i <= g.size(); ++i) {
        for (Player j = 1; j <= g.size(); ++j) out << (j > 1 ? " " : "") << g.value(i, j);
        out << '\n';
    }
    return out.str();
}

Partition parse_partition(std::string_view text, int n) {
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.empty()) throw ParseError(0, "empty partition");

    std::vector<std::vector<Player>> blocks;
    std::size_t pos = 0;
    for (;;) {
        if (pos >= compact.size() || compact[pos] != '{') {
            throw ParseError(0, "expected '{' at offset " + std::to_string(pos) + " of '" + compact + "'");
        }
        const auto close = compact.find('}', pos);
        if (close == std::string::npos) throw ParseError(0, "unterminated block in '" + compact + "'");
        std::string_view body(compact.data() + pos + 1, close - pos - 1);
        if (body.empty()) throw ParseError(0, "empty block in '" + compact + "'");
        std::vector<Player> block;
        while (!body.empty()) {
            const auto comma = body.find(',');
            block.push_back(parse_int<int>(body.substr(0, comma), 0, "a player index"));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
            if (body.empty()) throw ParseError(0, "trailing ',' in '" + compact + "'");
        }
        blocks.push_back(std::move(block));
        pos = close + 1;
        if (pos == compact.size()) break;
        if (compact[pos] != '|') throw ParseError(0, "expected '|' between blocks in '" + compact + "'");
        ++pos;
    }
    return Partition::from_blocks(std::move(blocks), n);
}

std::string serialize_partition(const Partition& p) {
    std::string out;
    for (std::size_t b = 0; b < p.block_count(); ++b) {
        if (b > 0) out += '|';
        out += '{';
        bool first = true;
        for (Player i : p.blocks()[b]) {
            if (!first) out += ',';
            out += std::to_string(i);
            first = false;
        }
        out += '}';
    }
    return out;
}

std::optional<GadgetKind> gadget_kind_from_name(std::string_view name) {
    if (name == "po-verify") return GadgetKind::PoVerify;
    if (name == "ef-ns") return GadgetKind::EfNs;
    if (name == "egal") return GadgetKind::Egalitarian;
    if (name == "po-ir") return GadgetKind::PoIr;
    if (name == "ef-po") return GadgetKind::EfPo;
    return std::nullopt;
}

E3CInstance parse_e3c(std::string_view document) {
    E3CInstance e;
    bool have_r = false;
    for (const auto& l : tokenize(document)) {
        if (l.tokens[0] == "r") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'r <size>'");
            if (have_r) throw ParseError(l.number, "ground set size given twice");
            e.r_size = parse_int<int>(l.tokens[1], l.number, "a ground set size");
            have_r = true;
        } else if (l.tokens[0] == "triple") {
            if (l.tokens.size() != 4) throw ParseError(l.number, "expected 'triple <a> <b> <c>'");
            e.triples.push_back({parse_int<int>(l.tokens[1], l.number, "an element"),
                                 parse_int<int>(l.tokens[2], l.number, "an element"),
                                 parse_int<int>(l.tokens[3], l.number, "an element")});
        } else {
            throw ParseError(l.number, "unknown E3C directive '" + std::string(l.tokens[0]) + "'");
        }
    }
    if (!have_r) throw ParseError(0, "E3C source lacks 'r <size>'");
    return e;
}

SchedulingInstance parse_scheduling(std::string_view document) {
    SchedulingInstance s;
    bool have_machines = false, have_jobs = false;
    for (const auto& l : tokenize(document)) {
        if (l.tokens[0] == "machines") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'machines <m>'");
            s.machines = parse_int<int>(l.tokens[1], l.number, "a machine count");
            have_machines = true;
        } else if (l.tokens[0] == "jobs") {
            if (have_jobs) throw ParseError(l.number, "jobs given twice");
            s.processing_times = int_list(l, 1);
            have_jobs = true;
        } else {
            throw ParseError(l.number, "unknown scheduling directive '" + std::string(l.tokens[0]) + "'");
        }
    }
    if (!have_machines) throw ParseError(0, "scheduling source lacks 'machines <m>'");
    return s;
}

SubsetSumZeroInstance parse_subset_sum(std::string_view document) {
    SubsetSumZeroInstance a;
    bool have = false;
    for (const auto& l : tokenize(document)) {
        if (l.tokens[0] != "weights") {
            throw ParseError(l.number, "unknown subset-sum directive '" + std::string(l.tokens[0]) + "'");
        }
        if (have) throw ParseError(l.number, "weights given twice");
        a.weights = int_list(l, 1);
        have = true;
    }
    if (!have) throw ParseError(0, "subset-sum source lacks 'weights ...'");
    return a;
}

AllocationInstance parse_allocation(std::string_view document) {
    AllocationInstance a;
    std::optional<int> declared;
    for (const auto& l : tokenize(document)) {
        if (l.tokens[0] == "objects") {
            if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'objects <k>'");
            declared = parse_int<int>(l.tokens[1], l.number, "an object count");
        } else if (l.tokens[0] == "agent") {
            auto row = int_list(l, 1);
            const int width = declared.value_or(a.weights.empty() ? static_cast<int>(row.size())
                                                                  : static_cast<int>(a.weights.front().size()));
            if (static_cast<int>(row.size()) != width) {
                throw ParseError(l.number, "agent row has " + std::to_string(row.size()) + " weights, expected " +
                                               std::to_string(width));
            }
            a.weights.push_back(std::move(row));
        } else {
            throw ParseError(l.number, "unknown allocation directive '" + std::string(l.tokens[0]) + "'");
        }
    }
    if (a.weights.empty()) throw ParseError(0, "allocation source lists no agents");
    a.agents = static_cast<int>(a.weights.size());
    a.objects = static_cast<int>(a.weights.front().size());
    return a;
}

std::string format_player(const Game& g, Player i, bool labelled) {
    std::string out = std::to_string(i);
    if (labelled && !g.label(i).empty()) out += " [" + g.label(i) + "]";
    return out;
}

std::string format_coalition(const Game& g, const Coalition& c, bool labelled) {
    std::string out = "{";
    bool first = true;
    for (Player i : c) {
        if (!first) out += ",";
        out += format_player(g, i, labelled);
        first = false;
    }
    return out + "}";
}

std::string format_witness(const Game& g, const Witness& w, bool labelled) {
    struct Visitor {
        const Game& g;
        bool labelled;
        std::string operator()(const ViolatingPlayer& v) const { return "player " + format_player(g, v.player, labelled); }
        std::string operator()(const Deviation& d) const {
            return "player " + format_player(g, d.player, labelled) + " -> " +
                   (d.target ? format_coalition(g, *d.target, labelled) : std::string("{}"));
        }
        std::string operator()(const Envy& e) const {
            return "player " + format_player(g, e.envious, labelled) + " envies " +
                   format_player(g, e.envied, labelled);
        }
        std::string operator()(const Partition& p) const { return serialize_partition(p); }
    };
    return std::visit(Visitor{g, labelled}, w);
}

}  // namespace hedonica
