#include "vxa/serialize.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace vxa {

using nlohmann::json;

json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m) exps[v] = e;
        terms.push_back({{"coef", to_string(c)}, {"exps", exps}});
    }
    return json{{"terms", terms}};
}

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        if (t.contains("exps"))
            for (auto it = t["exps"].begin(); it != t["exps"].end(); ++it)
                m[it.key()] = it.value().get<int>();
        p.add_term(m, parse_scalar(t.at("coef").get<std::string>()));
    }
    return p;
}

namespace {
std::string mode_name(SingMode m) {
    return m == SingMode::Additive ? "additive" : "multiplicative";
}
SingMode mode_from_name(const std::string& s) {
    if (s == "additive") return SingMode::Additive;
    if (s == "multiplicative") return SingMode::Multiplicative;
    throw std::invalid_argument("unknown singular mode: " + s);
}
}  // namespace

json to_json(const SingularFn& f) {
    json den = json::array();
    for (const auto& [k, p] : f.denominator())
        den.push_back({{"i", k.i}, {"j", k.j}, {"power", p}, {"shift", k.shift}});
    return json{{"den", den}, {"mode", mode_name(f.mode())}, {"num", to_json(f.numerator())}};
}

SingularFn singular_from_json(const json& j) {
    SingMode mode = j.contains("mode") ? mode_from_name(j.at("mode").get<std::string>())
                                       : SingMode::Additive;
    SingularFn f = SingularFn::from_laurent(laurent_from_json(j.at("num")), mode);
    if (j.contains("den"))
        for (const auto& d : j["den"])
            f = f * SingularFn::factor_inverse(mode, d.at("i").get<int>(), d.at("j").get<int>(),
                                               d.contains("shift") ? d["shift"].get<long>() : 0,
                                               d.at("power").get<int>());
    return f;
}

json to_json(const State& s) {
    json terms = json::array();
    for (const auto& [w, c] : s.terms()) {
        json word = json::array();
        for (const auto& g : w)
            word.push_back({{"label", s.family() ? s.family()->label_name(g.label)
                                                 : std::to_string(g.label)},
                            {"mode", g.mode}});
        terms.push_back({{"coef", to_string(c)}, {"word", word}});
    }
    return json{{"terms", terms}};
}

State state_from_json(const json& j, FamilyPtr fam) {
    State s(fam);
    for (const auto& t : j.at("terms")) {
        PBWMonomial w;
        for (const auto& g : t.at("word")) {
            int label = fam->label_index(g.at("label").get<std::string>());
            if (label < 0)
                throw std::invalid_argument("unknown generator label " +
                                            g.at("label").get<std::string>());
            w.push_back(Generator{label, g.at("mode").get<long>()});
        }
        s.add_term(w, parse_scalar(t.at("coef").get<std::string>()));
    }
    return s;
}

json to_json(const OpeResult& r) {
    json principal = json::object();
    for (const auto& [p, v] : r.principal) principal[std::to_string(p)] = to_json(v);
    json regular = json::array();
    for (const auto& [ij, v] : r.regular)
        regular.push_back({{"i", ij.first}, {"j", ij.second}, {"state", to_json(v)}});
    return json{{"principal", principal}, {"regular", regular}, {"truncation", r.truncation}};
}

json family_to_json(const AlgebraFamily& fam) {
    switch (fam.kind()) {
        case FamilyKind::Heisenberg:
            return json{{"kind", "heisenberg"}, {"level", to_string(fam.parameter())}};
        case FamilyKind::Virasoro:
            return json{{"kind", "virasoro"}, {"central_charge", to_string(fam.parameter())}};
        case FamilyKind::Affine: {
            json brackets = json::array();
            for (const auto& [ij, terms] : fam.lie().bracket) {
                json ts = json::array();
                for (const auto& [k, c] : terms)
                    ts.push_back({{"coef", to_string(c)}, {"gen", fam.label_name(k)}});
                brackets.push_back({{"left", fam.label_name(ij.first)},
                                    {"right", fam.label_name(ij.second)},
                                    {"terms", ts}});
            }
            json form = json::array();
            for (const auto& row : fam.lie().form) {
                json r = json::array();
                for (const auto& c : row) r.push_back(to_string(c));
                form.push_back(r);
            }
            return json{{"basis", fam.lie().labels}, {"brackets", brackets},
                        {"form", form},           {"kind", "affine"},
                        {"level", to_string(fam.parameter())}, {"name", fam.name()}};
        }
    }
    throw std::logic_error("unreachable");
}

FamilyPtr family_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "heisenberg") {
        Scalar level = j.contains("level") ? parse_scalar(j["level"].get<std::string>())
                                           : Scalar(1);
        return std::make_shared<AlgebraFamily>(AlgebraFamily::heisenberg(level));
    }
    if (kind == "virasoro") {
        Scalar c = j.contains("central_charge")
                       ? parse_scalar(j["central_charge"].get<std::string>())
                       : Scalar(1);
        return std::make_shared<AlgebraFamily>(AlgebraFamily::virasoro(c));
    }
    if (kind == "affine") {
        LieData lie;
        lie.labels = j.at("basis").get<std::vector<std::string>>();
        auto index = [&lie](const std::string& name) {
            for (size_t i = 0; i < lie.labels.size(); ++i)
                if (lie.labels[i] == name) return static_cast<int>(i);
            throw std::invalid_argument("unknown basis label " + name);
        };
        if (j.contains("brackets"))
            for (const auto& b : j["brackets"]) {
                int l = index(b.at("left").get<std::string>());
                int r = index(b.at("right").get<std::string>());
                if (l == r) throw std::invalid_argument("bracket of a generator with itself");
                std::map<int, Scalar> terms;
                for (const auto& t : b.at("terms")) {
                    Scalar c = parse_scalar(t.at("coef").get<std::string>());
                    if (!is_zero(c)) terms[index(t.at("gen").get<std::string>())] = c;
                }
                if (l < r)
                    lie.bracket[{l, r}] = std::move(terms);
                else {
                    for (auto& [k, c] : terms) c = -c;
                    lie.bracket[{r, l}] = std::move(terms);
                }
            }
        for (const auto& row : j.at("form")) {
            std::vector<Scalar> r;
            for (const auto& c : row) r.push_back(parse_scalar(c.get<std::string>()));
            lie.form.push_back(std::move(r));
        }
        Scalar level = j.contains("level") ? parse_scalar(j["level"].get<std::string>())
                                           : Scalar(0);
        const std::string name = j.contains("name") ? j["name"].get<std::string>() : "affine";
        return std::make_shared<AlgebraFamily>(AlgebraFamily::affine(name, std::move(lie), level));
    }
    throw std::invalid_argument("unknown family kind: " + kind);
}

FamilyPtr load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file " + path);
    json j;
    in >> j;
    return family_from_json(j);
}

json bichar_to_json(const Bicharacter& r) {
    json entries = json::array();
    for (const auto& [k, v] : r.table())
        entries.push_back({{"left", r.family()->label_name(k.first)},
                           {"right", r.family()->label_name(k.second)},
                           {"value", to_json(v)}});
    return json{{"entries", entries}, {"mode", mode_name(r.mode())}};
}

Bicharacter bichar_from_json(const json& j, FamilyPtr fam) {
    SingMode mode = j.contains("mode") ? mode_from_name(j.at("mode").get<std::string>())
                                       : SingMode::Additive;
    std::map<std::pair<int, int>, SingularFn> table;
    if (j.contains("entries"))
        for (const auto& e : j["entries"]) {
            int l = fam->label_index(e.at("left").get<std::string>());
            int r = fam->label_index(e.at("right").get<std::string>());
            if (l < 0 || r < 0) throw std::invalid_argument("unknown bicharacter label");
            table[{l, r}] = singular_from_json(e.at("value"));
        }
    return Bicharacter::from_table(std::move(fam), std::move(table), mode);
}

Bicharacter load_bichar_file(const std::string& path, FamilyPtr fam) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open bicharacter file " + path);
    json j;
    in >> j;
    return bichar_from_json(j, std::move(fam));
}

State parse_state_spec(const std::string& text, FamilyPtr fam) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("state spec '" + text + "': " + why);
    };
    std::vector<Generator> word;
    skip();
    while (pos < text.size() && text[pos] != '|') {
        std::string ident;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            ident += text[pos++];
        if (ident.empty()) fail("expected a generator name");
        std::string label_name = ident;
        skip();
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            std::string inner;
            while (pos < text.size() && text[pos] != ']') inner += text[pos++];
            if (pos == text.size()) fail("unterminated [label]");
            ++pos;
            label_name = inner;
        } else if (fam->kind() == FamilyKind::Affine) {
            // affine generators are written J[label](mode)
            if (fam->label_index(label_name) < 0) fail("affine generators use J[label](mode)");
        }
        skip();
        if (pos == text.size() || text[pos] != '(') fail("expected (mode)");
        ++pos;
        skip();
        std::string num;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) num += text[pos++];
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            num += text[pos++];
        if (num.empty() || (num.size() == 1 && !std::isdigit(static_cast<unsigned char>(num[0]))))
            fail("expected an integer mode");
        skip();
        if (pos == text.size() || text[pos] != ')') fail("expected )");
        ++pos;
        int label = fam->label_index(label_name);
        if (label < 0) fail("unknown generator '" + label_name + "'");
        word.push_back(Generator{label, std::stol(num)});
        skip();
    }
    if (text.compare(pos, 3, "|0>") != 0) fail("expected the vacuum |0>");
    pos += 3;
    skip();
    if (pos != text.size()) fail("trailing input");
    return straighten(word, fam);
}

}  // namespace vxa
