#include "hopad/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopad {

namespace {

std::vector<std::string> split_ws(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
std::optional<T> parse_number(std::string_view s)
{
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string_view strip_comment(std::string_view line)
{
    // A comment starts at a '#' that begins a token.
    for (std::size_t i = 0; i < line.size(); ++i)
        if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) return line.substr(0, i);
    return line;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

DataWord parse_data_word(std::string_view text)
{
    DataWord w;
    for (const auto& tok : split_ws(text)) {
        auto at = tok.rfind('@');
        if (at == std::string::npos || at == 0 || at + 1 == tok.size())
            throw std::invalid_argument("bad data-word token '" + tok + "' (expected letter@value)");
        auto v = parse_number<std::uint64_t>(std::string_view(tok).substr(at + 1));
        if (!v) throw std::invalid_argument("bad data value in token '" + tok + "'");
        w.push_back({tok.substr(0, at), *v});
    }
    return w;
}

std::string format_data_word(const DataWord& w)
{
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.letter + "@" + std::to_string(l.value);
    }
    return out;
}

std::string project_word(const DataWord& w)
{
    std::string out;
    for (const auto& l : w) out += l.letter;
    return out;
}

InputWord to_input_word(const Automaton& aut, const DataWord& w)
{
    InputWord out;
    out.reserve(w.size());
    for (const auto& l : w) {
        auto id = aut.letter_id(l.letter);
        if (!id) throw std::invalid_argument("letter '" + l.letter + "' is not in the input alphabet");
        out.push_back({*id, l.value});
    }
    return out;
}

DataWord to_data_word(const Automaton& aut, const InputWord& w)
{
    DataWord out;
    out.reserve(w.size());
    for (const auto& l : w) out.push_back({aut.input_alphabet().at(l.letter), l.value});
    return out;
}

std::variant<AutomatonDescription, std::vector<Diagnostic>> parse_automaton(std::string_view text)
{
    AutomatonDescription desc;
    std::vector<Diagnostic> diags;
    std::set<std::string> seen;
    bool have_level = false;
    int line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        std::string_view line = trim(strip_comment(raw));
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        auto toks = split_ws(line);
        const std::string& dir = toks[0];
        auto err = [&](const std::string& msg) { diags.push_back({"syntax", msg, line_no}); };
        auto once = [&]() {
            if (dir != "trans" && !seen.insert(dir).second) {
                err("directive '" + dir + "' repeated");
                return false;
            }
            return true;
        };
        auto args = std::vector<std::string>(toks.begin() + 1, toks.end());

        if (dir == "level") {
            if (!once()) continue;
            std::optional<int> v = args.size() == 1 ? parse_number<int>(args[0]) : std::nullopt;
            if (!v) {
                err("level expects one integer");
                continue;
            }
            desc.level = *v;
            have_level = true;
        } else if (dir == "collapsible") {
            if (!once()) continue;
            if (args.size() != 1 || (args[0] != "true" && args[0] != "false")) {
                err("collapsible expects true or false");
                continue;
            }
            desc.collapsible = args[0] == "true";
        } else if (dir == "input-alphabet") {
            if (once()) desc.input_alphabet = args;
        } else if (dir == "stack-alphabet") {
            if (once()) desc.stack_alphabet = args;
        } else if (dir == "states") {
            if (once()) desc.states = args;
        } else if (dir == "initial-state" || dir == "initial-symbol") {
            if (!once()) continue;
            if (args.size() != 1) {
                err(dir + " expects one name");
                continue;
            }
            (dir == "initial-state" ? desc.initial_state : desc.initial_symbol) = args[0];
        } else if (dir == "accepting") {
            if (once()) desc.accepting = args;
        } else if (dir == "start-stack") {
            if (!once()) continue;
            desc.start_stack = std::string(trim(line.substr(dir.size())));
        } else if (dir == "scenario-word") {
            if (!once()) continue;
            desc.scenario_word = std::string(trim(line.substr(dir.size())));
        } else if (dir == "trans") {
            // trans q A (eps | in a) q' (pop K | push K B | collapse I)
            TransitionSpec t;
            t.line = line_no;
            std::size_t i = 0;
            auto next = [&]() -> const std::string* { return i < args.size() ? &args[i++] : nullptr; };
            const std::string* q = next();
            const std::string* top = next();
            const std::string* kw = next();
            if (!q || !top || !kw) {
                err("trans expects: q symbol (eps | in letter) q' op");
                continue;
            }
            t.source = *q;
            t.top = *top;
            if (*kw == "in") {
                const std::string* a = next();
                if (!a) {
                    err("trans: missing letter after 'in'");
                    continue;
                }
                t.letter = *a;
            } else if (*kw != "eps") {
                err("trans: expected 'eps' or 'in', got '" + *kw + "'");
                continue;
            }
            const std::string* target = next();
            const std::string* op = next();
            const std::string* lvl = next();
            if (!target || !op || !lvl) {
                err("trans: missing target state or operation");
                continue;
            }
            t.target = *target;
            auto level = parse_number<int>(*lvl);
            if (!level) {
                err("trans: operation level '" + *lvl + "' is not an integer");
                continue;
            }
            t.level = *level;
            if (*op == "pop") {
                t.kind = OpKind::pop;
            } else if (*op == "collapse") {
                t.kind = OpKind::collapse;
            } else if (*op == "push") {
                t.kind = OpKind::push;
                const std::string* beta = next();
                if (!beta) {
                    err("trans: push needs a symbol");
                    continue;
                }
                t.symbol = *beta;
            } else {
                err("trans: unknown operation '" + *op + "'");
                continue;
            }
            if (i != args.size()) {
                err("trans: trailing tokens");
                continue;
            }
            desc.transitions.push_back(std::move(t));
        } else {
            err("unknown directive '" + dir + "'");
        }
        if (end == text.size()) break;
    }
    if (!have_level) diags.push_back({"syntax", "missing 'level' directive", 0});
    if (desc.initial_symbol.empty()) diags.push_back({"syntax", "missing 'initial-symbol' directive", 0});
    if (!diags.empty()) return diags;
    return desc;
}

std::string render_operation(const Operation& op, const std::vector<std::string>& symbol_names)
{
    switch (op.kind) {
    case OpKind::pop: return "pop " + std::to_string(op.level);
    case OpKind::push: return "push " + std::to_string(op.level) + " " + symbol_names.at(op.symbol);
    case OpKind::collapse: return "collapse " + std::to_string(op.level);
    }
    return "?";
}

std::string print_automaton(const AutomatonDescription& desc)
{
    std::ostringstream os;
    auto list = [&](const char* dir, const std::vector<std::string>& v) {
        os << dir;
        for (const auto& x : v) os << ' ' << x;
        os << '\n';
    };
    os << "level " << desc.level << '\n';
    os << "collapsible " << (desc.collapsible ? "true" : "false") << '\n';
    list("input-alphabet", desc.input_alphabet);
    list("stack-alphabet", desc.stack_alphabet);
    if (!desc.states.empty()) list("states", desc.states);
    os << "initial-state " << desc.initial_state << '\n';
    os << "initial-symbol " << desc.initial_symbol << '\n';
    list("accepting", desc.accepting);
    for (const auto& t : desc.transitions) {
        os << "trans " << t.source << ' ' << t.top << ' ';
        if (t.letter)
            os << "in " << *t.letter;
        else
            os << "eps";
        os << ' ' << t.target << ' ';
        switch (t.kind) {
        case OpKind::pop: os << "pop " << t.level; break;
        case OpKind::push: os << "push " << t.level << ' ' << t.symbol; break;
        case OpKind::collapse: os << "collapse " << t.level; break;
        }
        os << '\n';
    }
    if (desc.start_stack) os << "start-stack " << *desc.start_stack << '\n';
    if (desc.scenario_word) os << "scenario-word " << *desc.scenario_word << '\n';
    return os.str();
}

namespace {

void render_into(std::string& out, const Stack& s, const std::vector<std::string>& names)
{
    if (s.is_atom()) {
        const Atom& a = s.as_atom();
        out += '(';
        out += names.at(a.symbol);
        out += ',';
        out += a.data.has_value() ? std::to_string(a.data.value()) : std::string("-");
        if (!a.links.empty()) {
            out += ';';
            for (std::size_t i = 0; i < a.links.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(a.links[i]);
            }
        }
        out += ')';
        return;
    }
    out += '[';
    bool first = true;
    for (const auto& c : s.items()) {
        if (!first) out += ' ';
        first = false;
        render_into(out, c, names);
    }
    out += ']';
}

void render_compact_into(std::string& out, const Stack& s, const std::vector<std::string>& names, bool outer)
{
    if (s.is_atom()) {
        out += names.at(s.as_atom().symbol);
        return;
    }
    if (!outer) out += '[';
    for (const auto& c : s.items()) render_compact_into(out, c, names, false);
    if (!outer) out += ']';
}

class StackParser {
public:
    StackParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    Stack parse(int level)
    {
        Stack s = parse_level(level);
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw std::invalid_argument("stack syntax error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string_view read_until(std::string_view stops)
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return trim(text_.substr(start, pos_ - start));
    }

    Stack parse_level(int level)
    {
        if (level == 0) return parse_atom();
        expect('[');
        std::vector<Stack> items;
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ']') {
                ++pos_;
                break;
            }
            if (pos_ >= text_.size()) fail("unterminated stack");
            items.push_back(parse_level(level - 1));
        }
        return Stack::of(level, std::move(items));
    }

    Stack parse_atom()
    {
        expect('(');
        // Symbol names may themselves be brackets, so read up to the comma.
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',') ++pos_;
        std::string sym(trim(text_.substr(start, pos_ - start)));
        expect(',');
        auto it = std::find(names_.begin(), names_.end(), sym);
        if (it == names_.end()) fail("unknown stack symbol '" + sym + "'");
        Atom a;
        a.symbol = static_cast<SymbolId>(it - names_.begin());
        std::string_view data = read_until(";)");
        if (data != "-") {
            auto v = parse_number<std::uint64_t>(data);
            if (!v) fail("bad data value '" + std::string(data) + "'");
            a.data = DataValue::of(*v);
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ';') {
            ++pos_;
            for (;;) {
                std::string_view num = read_until(",)");
                auto v = parse_number<std::uint32_t>(num);
                if (!v) fail("bad link '" + std::string(num) + "'");
                a.links.push_back(*v);
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect(')');
        return Stack::atom(std::move(a));
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

} // namespace

std::string render_stack(const Stack& s, const std::vector<std::string>& symbol_names)
{
    std::string out;
    render_into(out, s, symbol_names);
    return out;
}

std::string render_stack_compact(const Stack& s, const std::vector<std::string>& symbol_names)
{
    std::string out;
    render_compact_into(out, s, symbol_names, true);
    return out;
}

Stack parse_stack(std::string_view text, int level, const std::vector<std::string>& symbol_names)
{
    if (level < 1) throw std::invalid_argument("parse_stack: level must be >= 1");
    return StackParser(text, symbol_names).parse(level);
}

} // namespace hopad
