#include "tbn/io.hpp"

#include "tbn/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace tbn {

namespace {

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// A line with its 1-based number, cut at the first `#`.
struct Cursor
{
    std::string_view text;
    std::size_t line = 0;
    std::size_t pos = 0;

    [[nodiscard]] std::size_t column() const { return pos + 1; }
    [[nodiscard]] bool done() const { return pos >= text.size(); }
    [[nodiscard]] char peek() const { return text[pos]; }

    void skip_space()
    {
        while (!done() && is_space(peek()))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line, column(), message); }

    /// Reads up to whitespace or any of `stops`.
    std::string_view token(std::string_view stops = {})
    {
        const std::size_t start = pos;
        while (!done() && !is_space(peek()) && stops.find(peek()) == std::string_view::npos)
            ++pos;
        return text.substr(start, pos - start);
    }

    /// Consumes a `COUNT *` prefix when present.
    int count_prefix()
    {
        std::size_t p = pos;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
            ++p;
        if (p == pos)
            return 1;
        std::size_t q = p;
        while (q < text.size() && is_space(text[q]))
            ++q;
        if (q >= text.size() || text[q] != '*' || (q + 1 < text.size() && !is_space(text[q + 1]) && text[q + 1] != '{'))
            return 1;
        int value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + p, value);
        if (ec != std::errc{} || end != text.data() + p)
            fail("count out of range");
        pos = q + 1;
        return value;
    }
};

template <typename F>
void for_each_line(std::string_view text, F&& f)
{
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        Cursor cursor{line, number, 0};
        cursor.skip_space();
        if (!cursor.done())
            f(cursor);
    }
}

SiteType parse_site(Cursor& c, std::string_view token, std::size_t start)
{
    std::string_view name = token;
    bool starred = false;
    if (!name.empty() && name.back() == '*') {
        starred = true;
        name.remove_suffix(1);
    }
    if (!is_identifier(name)) {
        c.pos = start;
        c.fail("invalid site '" + std::string{token} + "'");
    }
    return SiteType{std::string{name}, starred};
}

std::string read_file(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

std::shared_ptr<const Tbn> TbnDocument::to_tbn() const
{
    std::vector<std::pair<MonomerType, int>> entries;
    entries.reserve(monomers.size());
    for (const auto& m : monomers)
        entries.emplace_back(MonomerType{m.sites, m.label}, m.count);
    return std::make_shared<const Tbn>(entries);
}

TbnDocument TbnDocument::from_tbn(const Tbn& tbn)
{
    TbnDocument doc;
    for (std::size_t i = 0; i < tbn.type_count(); ++i) {
        const auto& type = tbn.types()[i];
        doc.monomers.push_back({tbn.counts()[i], type.label(), type.sites()});
    }
    return doc;
}

TbnDocument parse_tbn_document(std::string_view text, std::string source)
{
    TbnDocument doc;
    doc.source = std::move(source);
    for_each_line(text, [&](Cursor& c) {
        MonomerLine line;
        line.count = c.count_prefix();
        c.skip_space();
        if (auto colon = c.text.find(':', c.pos); colon != std::string_view::npos) {
            const std::size_t start = c.pos;
            auto label = c.token(":");
            c.skip_space();
            if (label.empty() || c.done() || c.peek() != ':') {
                c.pos = start;
                c.fail("expected a single label before ':'");
            }
            line.label = std::string{label};
            ++c.pos;
            c.skip_space();
        }
        while (!c.done()) {
            const std::size_t start = c.pos;
            auto token = c.token();
            line.sites.push_back(parse_site(c, token, start));
            c.skip_space();
        }
        if (line.sites.empty())
            c.fail("monomer has no sites");
        doc.monomers.push_back(std::move(line));
    });
    return doc;
}

ParsedTbn parse_tbn(std::string_view text, std::string source)
{
    ParsedTbn parsed;
    parsed.document = parse_tbn_document(text, std::move(source));
    parsed.tbn = parsed.document.to_tbn();
    if (auto sites = parsed.tbn->non_limiting_sites(); !sites.empty()) {
        std::string list;
        for (const auto& s : sites)
            list += (list.empty() ? "" : ", ") + s;
        parsed.warnings.push_back(parsed.document.source + ": not star-limiting; more starred than unstarred copies of " +
                                  list);
    }
    return parsed;
}

ParsedTbn read_tbn_file(const std::string& path)
{
    return parse_tbn(read_file(path), path);
}

std::string serialize_tbn(const TbnDocument& doc)
{
    std::string out;
    for (const auto& m : doc.monomers) {
        out += std::to_string(m.count) + " *";
        if (m.label)
            out += " " + *m.label + ":";
        for (const auto& s : m.sites)
            out += " " + s.str();
        out += "\n";
    }
    return out;
}

std::string serialize_tbn(const Tbn& tbn)
{
    return serialize_tbn(TbnDocument::from_tbn(tbn));
}

Configuration parse_configuration(const std::shared_ptr<const Tbn>& tbn, std::string_view text)
{
    std::map<Polymer, int> polymers;
    std::vector<int> used(tbn->type_count(), 0);
    for_each_line(text, [&](Cursor& c) {
        const int count = c.count_prefix();
        c.skip_space();
        if (c.done() || c.peek() != '{')
            c.fail("expected '{'");
        ++c.pos;
        std::vector<int> members(tbn->type_count(), 0);
        while (true) {
            c.skip_space();
            if (c.done())
                c.fail("expected '}'");
            const std::size_t start = c.pos;
            if (c.peek() == '}') {
                ++c.pos;
                break;
            }
            std::optional<std::size_t> index;
            if (c.peek() == '(') {
                ++c.pos;
                std::vector<SiteType> sites;
                while (true) {
                    c.skip_space();
                    if (c.done())
                        c.fail("expected ')'");
                    if (c.peek() == ')') {
                        ++c.pos;
                        break;
                    }
                    const std::size_t site_start = c.pos;
                    auto token = c.token(")");
                    sites.push_back(parse_site(c, token, site_start));
                }
                if (sites.empty()) {
                    c.pos = start;
                    c.fail("monomer has no sites");
                }
                index = tbn->index_of(MonomerType{sites});
            } else {
                index = tbn->index_of_label(c.token("}"));
            }
            if (!index) {
                c.pos = start;
                c.fail("unknown monomer '" + std::string{c.text.substr(start, c.pos - start)} + "'");
            }
            ++members[*index];
        }
        c.skip_space();
        if (!c.done())
            c.fail("unexpected text after '}'");
        if (std::all_of(members.begin(), members.end(), [](int v) { return v == 0; }))
            c.fail("empty polymer");
        for (std::size_t t = 0; t < members.size(); ++t)
            used[t] += count * members[t];
        if (count > 0)
            polymers[tbn->polymer_from_counts(members)] += count;
    });
    for (std::size_t t = 0; t < used.size(); ++t)
        if (used[t] != tbn->counts()[t])
            throw InvalidArgument("configuration uses " + std::to_string(used[t]) + " copies of " +
                                  tbn->types()[t].display_name() + ", TBN has " + std::to_string(tbn->counts()[t]));
    return Configuration{tbn, std::move(polymers)};
}

Configuration read_configuration_file(const std::shared_ptr<const Tbn>& tbn, const std::string& path)
{
    return parse_configuration(tbn, read_file(path));
}

std::string serialize_configuration(const Configuration& config)
{
    std::string out;
    for (const auto& [polymer, count] : config.polymers())
        out += std::to_string(count) + " * " + polymer.str() + "\n";
    return out;
}

} // namespace tbn
