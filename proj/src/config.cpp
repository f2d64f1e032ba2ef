#include "coulomb/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace coulomb {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

int parse_int(const std::string& word, int lineno) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(word, &used);
    } catch (const std::exception&) {
        fail(lineno, "bad integer '" + word + "'");
    }
    if (used != word.size()) fail(lineno, "bad integer '" + word + "'");
    return value;
}

std::vector<int> parse_ints(const std::string& value, int lineno) {
    std::vector<int> out;
    for (const std::string& w : split_words(value)) out.push_back(parse_int(w, lineno));
    return out;
}

Scalar parse_rational(const std::string& word, int lineno) {
    std::size_t slash = word.find('/');
    if (slash == std::string::npos) return Scalar(parse_int(word, lineno));
    int num = parse_int(word.substr(0, slash), lineno);
    int den = parse_int(word.substr(slash + 1), lineno);
    if (den == 0) fail(lineno, "zero denominator");
    Scalar c(num, den);
    c.canonicalize();
    return c;
}

std::pair<int, int> parse_arrow(const std::string& word, int lineno) {
    std::size_t at = word.find("->");
    if (at == std::string::npos || at == 0 || at + 2 >= word.size())
        fail(lineno, "bad arrow '" + word + "' (want tail->head)");
    int tail = parse_int(word.substr(0, at), lineno);
    int head = parse_int(word.substr(at + 2), lineno);
    if (tail < 1 || head < 1) fail(lineno, "arrow vertices are 1-based");
    return {tail - 1, head - 1};
}

}  // namespace

EngineConfig parse_config(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string section;
    std::map<std::string, std::pair<std::string, int>> gauge_keys, engine_keys;

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        std::string body = line.substr(first, last - first + 1);

        if (body.front() == '[') {
            if (body.back() != ']') fail(lineno, "unterminated section header");
            section = body.substr(1, body.size() - 2);
            if (section != "gauge" && section != "engine")
                fail(lineno, "unknown section '" + section + "'");
            continue;
        }
        std::size_t eq = body.find('=');
        if (eq == std::string::npos) fail(lineno, "expected key = value");
        std::string key = body.substr(0, eq);
        std::string value = body.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        std::size_t vstart = value.find_first_not_of(" \t");
        value = vstart == std::string::npos ? "" : value.substr(vstart);
        if (key.empty()) fail(lineno, "empty key");
        if (section.empty()) fail(lineno, "key outside a section");

        auto& keys = section == "gauge" ? gauge_keys : engine_keys;
        static const std::vector<std::string> gauge_known{
            "vertices", "arrows", "v", "w", "flavours", "flavour_values", "coframing"};
        static const std::vector<std::string> engine_known{"hmode", "bounds", "format"};
        const auto& known = section == "gauge" ? gauge_known : engine_known;
        bool ok = false;
        for (const std::string& k : known) ok = ok || k == key;
        if (!ok) fail(lineno, "unknown key '" + key + "' in section [" + section + "]");
        if (keys.count(key)) fail(lineno, "duplicate key '" + key + "'");
        keys[key] = {value, lineno};
    }

    auto required = [&](const std::string& key) -> const std::pair<std::string, int>& {
        auto it = gauge_keys.find(key);
        if (it == gauge_keys.end())
            throw std::invalid_argument("missing key '" + key + "' in section [gauge]");
        return it->second;
    };

    const auto& [nverts_text, nverts_line] = required("vertices");
    int nverts = parse_int(nverts_text, nverts_line);
    const auto& [v_text, v_line] = required("v");
    std::vector<int> v = parse_ints(v_text, v_line);
    const auto& [w_text, w_line] = required("w");
    std::vector<int> w = parse_ints(w_text, w_line);

    std::vector<std::pair<int, int>> arrows;
    if (auto it = gauge_keys.find("arrows"); it != gauge_keys.end())
        for (const std::string& word : split_words(it->second.first))
            arrows.push_back(parse_arrow(word, it->second.second));

    std::vector<int> flavour_seq;
    if (auto it = gauge_keys.find("flavours"); it != gauge_keys.end()) {
        for (int label : parse_ints(it->second.first, it->second.second)) {
            if (label < 1) fail(it->second.second, "flavour vertices are 1-based");
            flavour_seq.push_back(label - 1);
        }
    } else {
        for (int i = 0; i < static_cast<int>(w.size()); ++i)
            flavour_seq.insert(flavour_seq.end(), w[i], i);
    }

    std::vector<std::optional<Scalar>> flavour_values;
    if (auto it = gauge_keys.find("flavour_values"); it != gauge_keys.end())
        for (const std::string& word : split_words(it->second.first))
            flavour_values.push_back(parse_rational(word, it->second.second));

    std::vector<int> coframing;
    if (auto it = gauge_keys.find("coframing"); it != gauge_keys.end())
        coframing = parse_ints(it->second.first, it->second.second);

    EngineConfig cfg{GaugeData::make(Quiver::make(nverts, std::move(arrows)), std::move(v),
                                     std::move(w), std::move(flavour_seq),
                                     std::move(flavour_values), std::move(coframing)),
                     HMode::Symbolic, 6, 1};

    if (auto it = engine_keys.find("hmode"); it != engine_keys.end()) {
        if (it->second.first == "symbolic")
            cfg.hmode = HMode::Symbolic;
        else if (it->second.first == "one")
            cfg.hmode = HMode::One;
        else
            fail(it->second.second, "hmode must be symbolic or one");
    }
    if (auto it = engine_keys.find("bounds"); it != engine_keys.end()) {
        cfg.bounds = parse_int(it->second.first, it->second.second);
        if (cfg.bounds < 1) fail(it->second.second, "bounds must be positive");
    }
    if (auto it = engine_keys.find("format"); it != engine_keys.end()) {
        cfg.format = parse_int(it->second.first, it->second.second);
        if (cfg.format != 1) fail(it->second.second, "unsupported format version");
    }
    return cfg;
}

EngineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace coulomb
