#include "probplan/sexpr.h"

#include <cctype>

using namespace std;

namespace probplan {
bool SExpr::is_form(string_view keyword) const {
    return list && !children.empty() && children.front().is_symbol(keyword);
}

string SExpr::str() const {
    if (!list)
        return text;
    string out = "(";
    for (size_t i = 0; i < children.size(); ++i) {
        if (i)
            out += ' ';
        out += children[i].str();
    }
    out += ')';
    return out;
}

namespace {
class Reader {
    string_view text;
    const string &file;
    size_t pos = 0;
    int line = 1;
    int column = 1;

    SourceLocation here() const {return {file, line, column};}

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_blanks() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ';') {
                while (pos < text.size() && text[pos] != '\n')
                    advance();
            } else if (isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    SExpr read_one() {
        skip_blanks();
        if (pos >= text.size())
            throw SyntaxError(here(), "unexpected end of input");
        SExpr node;
        node.location = here();
        if (text[pos] == ')')
            throw SyntaxError(here(), "unbalanced ')'");
        if (text[pos] == '(') {
            node.list = true;
            advance();
            while (true) {
                skip_blanks();
                if (pos >= text.size())
                    throw SyntaxError(node.location, "unterminated list");
                if (text[pos] == ')') {
                    advance();
                    break;
                }
                node.children.push_back(read_one());
            }
            return node;
        }
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(' || c == ')' || c == ';' || isspace(static_cast<unsigned char>(c)))
                break;
            node.text += static_cast<char>(tolower(static_cast<unsigned char>(c)));
            advance();
        }
        return node;
    }

public:
    Reader(string_view text, const string &file) : text(text), file(file) {}

    vector<SExpr> read_all() {
        vector<SExpr> result;
        while (true) {
            skip_blanks();
            if (pos >= text.size())
                break;
            result.push_back(read_one());
        }
        return result;
    }
};
}

vector<SExpr> read_sexprs(string_view text, const string &file) {
    return Reader(text, file).read_all();
}
}
