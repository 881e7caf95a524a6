// Reader for the subset of GML used by the Newman network-data files.

#include <cctype>
#include <optional>
#include <unordered_map>

#include "scoreplus/graph.hpp"

namespace scoreplus {

namespace {

struct Token {
    enum class Kind { Key, Number, String, Open, Close, End } kind;
    std::string text;
    std::size_t line;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        if (pos_ >= text_.size()) return {Token::Kind::End, {}, line_};
        char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            return {Token::Kind::Open, "[", line_};
        }
        if (c == ']') {
            ++pos_;
            return {Token::Kind::Close, "]", line_};
        }
        if (c == '"') {
            std::size_t start_line = line_;
            std::size_t end = ++pos_;
            while (end < text_.size() && text_[end] != '"') {
                if (text_[end] == '\n') ++line_;
                ++end;
            }
            if (end >= text_.size()) throw ParseError("unterminated string", start_line);
            std::string s(text_.substr(pos_, end - pos_));
            pos_ = end + 1;
            return {Token::Kind::String, std::move(s), start_line};
        }
        std::size_t end = pos_;
        while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
               text_[end] != '[' && text_[end] != ']' && text_[end] != '"') {
            ++end;
        }
        std::string word(text_.substr(pos_, end - pos_));
        pos_ = end;
        unsigned char first = static_cast<unsigned char>(word[0]);
        bool numeric = std::isdigit(first) || word[0] == '-' || word[0] == '+' || word[0] == '.';
        return {numeric ? Token::Kind::Number : Token::Kind::Key, std::move(word), line_};
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

struct Record {
    std::unordered_map<std::string, std::string> scalars;
    std::size_t line = 0;
};

// Consume a bracketed list whose opening '[' has been read, keeping scalar
// attributes; nested lists are skipped.
Record read_record(Lexer& lex, std::size_t open_line) {
    Record rec;
    rec.line = open_line;
    for (;;) {
        Token key = lex.next();
        if (key.kind == Token::Kind::Close) return rec;
        if (key.kind == Token::Kind::End) throw ParseError("unbalanced '[': block never closed", open_line);
        if (key.kind != Token::Kind::Key) throw ParseError("expected attribute key, got '" + key.text + "'", key.line);
        Token value = lex.next();
        switch (value.kind) {
            case Token::Kind::Open:
                read_record(lex, value.line);
                break;
            case Token::Kind::Number:
            case Token::Kind::String:
                rec.scalars.emplace(key.text, value.text);
                break;
            default:
                throw ParseError("missing value for key '" + key.text + "'", key.line);
        }
    }
}

}  // namespace

Graph parse_gml(std::string_view text) {
    Lexer lex(text);
    std::vector<Record> nodes;
    std::vector<Record> edges;
    bool saw_graph = false;

    for (;;) {
        Token t = lex.next();
        if (t.kind == Token::Kind::End) break;
        if (t.kind == Token::Kind::Close) throw ParseError("unbalanced ']'", t.line);
        if (t.kind != Token::Kind::Key) throw ParseError("unexpected token '" + t.text + "'", t.line);
        Token v = lex.next();
        if (v.kind != Token::Kind::Open) {
            if (v.kind == Token::Kind::End) throw ParseError("missing value for key '" + t.text + "'", t.line);
            continue;  // top-level scalar such as `Creator "..."`
        }
        if (t.text != "graph") {
            read_record(lex, v.line);
            continue;
        }
        saw_graph = true;
        for (;;) {
            Token key = lex.next();
            if (key.kind == Token::Kind::Close) break;
            if (key.kind == Token::Kind::End) throw ParseError("unbalanced '[': graph block never closed", v.line);
            if (key.kind != Token::Kind::Key) throw ParseError("expected attribute key, got '" + key.text + "'", key.line);
            Token val = lex.next();
            if (val.kind == Token::Kind::Open) {
                Record rec = read_record(lex, val.line);
                if (key.text == "node") nodes.push_back(std::move(rec));
                else if (key.text == "edge") edges.push_back(std::move(rec));
            } else if (val.kind == Token::Kind::End || val.kind == Token::Kind::Close) {
                throw ParseError("missing value for key '" + key.text + "'", key.line);
            }
        }
    }
    if (!saw_graph) throw ParseError("no graph block found", 0);

    std::unordered_map<std::string, NodeIndex> index;
    std::vector<std::string> names;
    std::vector<std::string> raw_labels;
    std::size_t with_value = 0;
    for (const auto& rec : nodes) {
        auto id = rec.scalars.find("id");
        if (id == rec.scalars.end()) throw ParseError("node without id", rec.line);
        if (!index.emplace(id->second, names.size()).second) {
            throw ParseError("duplicate node id " + id->second, rec.line);
        }
        auto label = rec.scalars.find("label");
        names.push_back(label != rec.scalars.end() ? label->second : id->second);
        auto value = rec.scalars.find("value");
        if (value != rec.scalars.end()) {
            ++with_value;
            raw_labels.push_back(value->second);
        } else {
            raw_labels.emplace_back();
        }
    }
    // node labels double as names only when they are unique
    {
        std::unordered_map<std::string, int> seen;
        bool unique = true;
        for (const auto& s : names) unique = unique && seen.emplace(s, 0).second;
        if (!unique) {
            for (std::size_t i = 0; i < nodes.size(); ++i) names[i] = nodes[i].scalars.at("id");
        }
    }

    std::vector<Edge> edge_list;
    edge_list.reserve(edges.size());
    for (const auto& rec : edges) {
        auto s = rec.scalars.find("source");
        auto t = rec.scalars.find("target");
        if (s == rec.scalars.end() || t == rec.scalars.end()) throw ParseError("edge without source/target", rec.line);
        auto si = index.find(s->second);
        auto ti = index.find(t->second);
        if (si == index.end() || ti == index.end()) throw ParseError("edge references unknown node id", rec.line);
        edge_list.push_back({si->second, ti->second});
    }

    const std::size_t n = names.size();
    Graph g(n, std::move(edge_list), std::move(names));
    if (with_value == nodes.size() && !nodes.empty()) {
        g.set_raw_labels(raw_labels);
    } else if (with_value != 0) {
        throw ParseError("only " + std::to_string(with_value) + " of " + std::to_string(nodes.size()) +
                             " nodes carry a value attribute",
                         0);
    }
    return g;
}

}  // namespace scoreplus
