// supercrystal: batch front end to the library.
//
//   supercrystal enumerate --alphabet half:1 --shape 2
//   supercrystal component --alphabet half:2 --shape 2,1
//   supercrystal insert --word "1 1/2 1 5/2 2 2"
//   supercrystal verify --suite all
//
// Exit status: 0 on success, 1 when a verification suite fails, 2 on bad
// input.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "supercrystal.hpp"
#include "supercrystal/json_io.hpp"

namespace sc = supercrystal;

namespace {

struct Options {
    std::string alphabet;
    std::string shape;
    std::string kind = "qr";
    std::string body;
    std::string tail;
    int m = -1;
    std::string word;
    std::string tensor;
    std::string matrix;
    std::string suite = "all";
    std::string poly;
    std::string n;
    std::size_t cap = sc::kDefaultCap;
    std::string out;
    bool column = false;
};

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> v;
    if (s.empty()) return v;
    for (const auto& t : sc::detail::split(s, ',')) {
        try {
            std::size_t used = 0;
            int x = std::stoi(t, &used);
            if (used != t.size() || x <= 0) throw std::invalid_argument(t);
            v.push_back(x);
        } catch (const std::exception&) {
            throw sc::InputError("bad part '" + t + "' in '" + s + "'");
        }
    }
    return v;
}

/// The smallest truncation holding every letter of the word, when no
/// alphabet is given.
sc::GradedAlphabet infer_alphabet(const std::string& word) {
    std::istringstream is(word);
    std::string tok;
    int top = 1, low = 0;
    while (is >> tok) {
        int k = sc::parse_key(tok);
        if (k > 0) top = std::max(top, k);
        else if (k < 0 && k % 2 == 0) low = std::max(low, -k / 2);
        else throw sc::InputError("letter " + tok + " is in no default alphabet; pass --alphabet");
    }
    if (low == 0) return sc::build_alphabet(sc::HalfTruncSpec{top});
    return sc::build_alphabet(sc::MixedTruncSpec{low, top});
}

sc::GradedAlphabet alphabet_of(const Options& o) {
    if (!o.alphabet.empty()) return sc::parse_alphabet(o.alphabet);
    if (!o.word.empty()) return infer_alphabet(o.word);
    throw sc::InputError("--alphabet is required");
}

/// Number of leading even letters of a mixed or half alphabet; used as m
/// when naming kite components.
int default_m(const Options& o, const sc::GradedAlphabet& a) {
    if (o.m >= 0) return o.m;
    if (a.family() == sc::AlphabetFamily::Mixed) {
        int m = 0;
        while (m < a.size() && a.key(sc::Letter(m)) < 0) ++m;
        return m;
    }
    return 0;
}

sc::Shape shape_of(const Options& o) {
    if (!o.body.empty() || !o.tail.empty()) {
        sc::Partition body(parse_ints(o.body));
        sc::Composition tail(parse_ints(o.tail));
        int m = o.m >= 0 ? o.m : body.length();
        return sc::Shape::kite(sc::KiteShape{body, tail, m});
    }
    if (o.shape.empty()) throw sc::InputError("--shape or --body/--tail is required");
    if (o.kind == "qr") return sc::Shape::ribbon(sc::Composition(parse_ints(o.shape)));
    if (o.kind == "ssyt") return sc::Shape::young(sc::Partition(parse_ints(o.shape)));
    throw sc::InputError("--kind must be qr or ssyt");
}

void need_out(const Options& o, std::initializer_list<const char*> allowed) {
    if (o.out.empty()) return;
    for (const char* a : allowed)
        if (o.out == a) return;
    throw sc::InputError("--out " + o.out + " is not available for this command");
}

void print_json(const sc::Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_enumerate(const Options& o) {
    need_out(o, {"json", "text"});
    auto a = alphabet_of(o);
    auto ts = sc::enumerate(shape_of(o), a);
    if (o.out == "text") {
        for (const auto& t : ts) std::cout << sc::format_word(a, t.reading_word()) << "\n";
        return 0;
    }
    sc::Json arr = sc::Json::array();
    for (const auto& t : ts) arr.push_back(sc::tableau_to_json(a, t));
    print_json(arr);
    return 0;
}

sc::Word seed_of(const Options& o, const sc::GradedAlphabet& a) {
    if (!o.word.empty()) return sc::parse_word(a, o.word);
    return sc::highest_tableau(shape_of(o), a).reading_word();
}

int cmd_component(const Options& o) {
    need_out(o, {"dot", "json"});
    auto a = alphabet_of(o);
    auto c = sc::explore_component(a, seed_of(o, a), o.cap);
    if (o.out == "json") print_json(sc::component_to_json(a, c));
    else std::cout << sc::to_dot(a, c);
    if (c.truncated) std::cerr << "warning: component truncated at " << o.cap << " elements\n";
    return 0;
}

std::vector<sc::Word> tensor_words(const Options& o, const sc::GradedAlphabet& a) {
    std::vector<sc::Word> acc{{}};
    for (const auto& f : sc::detail::split(o.tensor, ';')) {
        auto ws = sc::enumerate_words(sc::Shape::ribbon(sc::Composition(parse_ints(f))), a);
        std::vector<sc::Word> next;
        for (const auto& u : acc)
            for (const auto& v : ws) {
                sc::Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                next.push_back(std::move(w));
            }
        acc = std::move(next);
    }
    return acc;
}

int cmd_decompose(const Options& o) {
    need_out(o, {"json", "text"});
    auto a = alphabet_of(o);
    std::vector<sc::Word> words = o.tensor.empty() ? sc::enumerate_words(shape_of(o), a) : tensor_words(o, a);
    auto comps = sc::decompose(a, words);
    const int m = default_m(o, a);
    const bool nameable = a.family() == sc::AlphabetFamily::Half || a.family() == sc::AlphabetFamily::Mixed;
    std::map<std::string, int> tally;
    sc::Json arr = sc::Json::array();
    for (const auto& c : comps) {
        std::optional<sc::KiteShape> k;
        if (nameable) k = sc::identify_component(a, c, m, o.cap);
        sc::Json hi = sc::Json::array();
        for (int h : c.highest) hi.push_back(sc::format_word(a, c.elements[h]));
        sc::Json e{{"size", c.size()}, {"highest", hi}};
        if (k) e["kite"] = sc::kite_to_json(*k);
        arr.push_back(e);
        ++tally[k ? k->to_string() : "unidentified"];
    }
    if (o.out == "json") {
        print_json(sc::Json{{"alphabet", a.spec()}, {"elements", words.size()}, {"components", arr}});
        return 0;
    }
    std::cout << a.spec() << ": " << words.size() << " elements, " << comps.size() << " components\n";
    for (const auto& [name, cnt] : tally) std::cout << "  " << name << " x" << cnt << "\n";
    return 0;
}

int cmd_insert(const Options& o) {
    need_out(o, {"json"});
    auto a = alphabet_of(o);
    auto w = sc::parse_word(a, o.word);
    sc::Json j{{"alphabet", a.spec()}, {"word", sc::format_word(a, w)}};
    if (o.column) {
        j["P"] = sc::tableau_to_json(a, sc::bold_P(a, w));
    } else {
        auto [P, Q] = sc::qr_insertion(a, w);
        j["P"] = sc::tableau_to_json(a, P);
        j["Q"] = sc::ribbon_tableau_to_json(Q);
    }
    print_json(j);
    return 0;
}

int cmd_rsk(const Options& o) {
    need_out(o, {"json"});
    auto a = alphabet_of(o);
    if (o.matrix.empty()) throw sc::InputError("--matrix is required");
    std::ifstream in(o.matrix);
    if (!in) throw sc::InputError("cannot read " + o.matrix);
    sc::Json mj;
    try {
        in >> mj;
    } catch (const sc::Json::exception& e) {
        throw sc::InputError(std::string("bad matrix JSON: ") + e.what());
    }
    auto m = sc::matrix_from_json(a, mj);
    auto [p1, p2] = sc::rsk(a, m);
    print_json(sc::Json{{"alphabet", a.spec()},
                        {"P1", sc::tableau_to_json(a, p1)},
                        {"P2", sc::tableau_to_json(a, p2)},
                        {"shapes", sc::Json::array({p1.shape().tail.parts(), p2.shape().tail.parts()})}});
    return 0;
}

int cmd_character(const Options& o) {
    need_out(o, {"json", "text"});
    auto a = alphabet_of(o);
    auto f = sc::character(a, shape_of(o));
    if (o.out == "json") print_json(sc::poly_to_json(f));
    else std::cout << f.to_string() << "\n";
    return 0;
}

int cmd_membership(const Options& o) {
    need_out(o, {"json", "text"});
    if (o.poly.empty() || o.n.empty() || o.m < 0) throw sc::InputError("--poly, --m and --n are required");
    auto f = sc::parse_poly(o.poly);
    const int n2 = sc::parse_key(o.n);
    auto r = sc::qsym_membership(f, o.m, n2);
    // for a member the witness is its expansion in kite characters
    sc::Json expansion = sc::Json::array();
    std::string text = r.witness;
    if (r.member && !f.is_zero()) {
        auto e = sc::expand_in_basis(f, o.m, sc::build_alphabet(sc::MixedTruncSpec{o.m, n2}));
        std::ostringstream os;
        for (const auto& [k, c] : e.coefficients) {
            expansion.push_back(sc::Json{{"kite", sc::kite_to_json(k)}, {"coefficient", c.str()}});
            os << (os.tellp() > 0 ? " + " : "") << c.str() << "*" << k.to_string();
        }
        text = e.ok ? os.str() : e.failure;
    }
    if (o.out == "json") {
        print_json(sc::Json{{"member", r.member}, {"witness", r.witness}, {"expansion", expansion}});
    } else {
        std::cout << (r.member ? "true" : "false");
        if (!text.empty()) std::cout << ": " << text;
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o) {
    need_out(o, {"text"});
    std::vector<std::string> names;
    if (o.suite == "all") names = sc::suite_names();
    else names.push_back(o.suite);
    for (const auto& n : names) {
        auto known = sc::suite_names();
        if (std::find(known.begin(), known.end(), n) == known.end())
            throw sc::InputError("unknown suite \"" + n + "\"");
    }
    bool all = true;
    std::cout << std::left << std::setw(24) << "suite" << std::setw(6) << "result" << std::right << std::setw(10)
              << "seconds" << std::setw(8) << "limit" << "  detail\n";
    for (const auto& n : names) {
        auto r = sc::run_suite(n);
        all = all && r.pass();
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << r.seconds;
        std::string detail = r.detail;
        if (r.ok && !r.in_time) detail = "over the time limit; " + detail;
        std::cout << std::left << std::setw(24) << r.name << std::setw(6) << (r.pass() ? "PASS" : "FAIL") << std::right
                  << std::setw(10) << secs.str() << std::setw(8) << r.limit << "  " << detail << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crystal bases of gl(m|n): tableaux, insertion, RSK and characters"};
    app.require_subcommand(1);
    Options o;

    auto add_alphabet = [&](CLI::App* c) {
        c->add_option("--alphabet", o.alphabet, "mn:m,n  half:n  mixed:m,n  perm:<base>:omega  custom:...");
    };
    auto add_shape = [&](CLI::App* c) {
        c->add_option("--shape", o.shape, "parts, e.g. 2,1");
        c->add_option("--kind", o.kind, "qr (ribbon) or ssyt (Young)")->check(CLI::IsMember({"qr", "ssyt"}));
        c->add_option("--body", o.body, "kite body partition");
        c->add_option("--tail", o.tail, "kite tail composition");
        c->add_option("--m", o.m, "kite body rows");
    };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "dot, json or text"); };

    auto* en = app.add_subcommand("enumerate", "all tableaux of a shape");
    add_alphabet(en);
    add_shape(en);
    add_out(en);

    auto* co = app.add_subcommand("component", "connected component of a word as DOT");
    add_alphabet(co);
    add_shape(co);
    co->add_option("--word", o.word, "seed word; defaults to the highest tableau of the shape");
    co->add_option("--cap", o.cap, "element limit");
    add_out(co);

    auto* de = app.add_subcommand("decompose", "components of B(shape) or of a tensor product of ribbons");
    add_alphabet(de);
    add_shape(de);
    de->add_option("--tensor", o.tensor, "ribbon factors, e.g. \"2,1;1\"");
    de->add_option("--cap", o.cap, "element limit for equivalence checks");
    add_out(de);

    auto* in = app.add_subcommand("insert", "quasi-ribbon insertion of a word");
    add_alphabet(in);
    in->add_option("--word", o.word, "letters separated by spaces")->required();
    in->add_flag("--column", o.column, "semistandard column insertion instead");
    add_out(in);

    auto* rs = app.add_subcommand("rsk", "matrix to a pair of quasi-ribbon tableaux");
    add_alphabet(rs);
    rs->add_option("--matrix", o.matrix, "JSON file {\"entries\":[[r,s,count],...]}");
    add_out(rs);

    auto* ch = app.add_subcommand("character", "character of B(shape)");
    add_alphabet(ch);
    add_shape(ch);
    add_out(ch);

    auto* me = app.add_subcommand("membership", "test for a super quasi-symmetric polynomial");
    me->add_option("--poly", o.poly, "e.g. \"z[1/2]*z[1] + z[1]^2\"");
    me->add_option("--m", o.m, "number of negative variables");
    me->add_option("--n", o.n, "truncation bound, e.g. 3/2");
    add_out(me);

    auto* ve = app.add_subcommand("verify", "run verification suites");
    ve->add_option("--suite", o.suite, "suite name or all");
    add_out(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (en->parsed()) return cmd_enumerate(o);
        if (co->parsed()) return cmd_component(o);
        if (de->parsed()) return cmd_decompose(o);
        if (in->parsed()) return cmd_insert(o);
        if (rs->parsed()) return cmd_rsk(o);
        if (ch->parsed()) return cmd_character(o);
        if (me->parsed()) return cmd_membership(o);
        if (ve->parsed()) return cmd_verify(o);
    } catch (const sc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sc::IndeterminateError& e) {
        std::cerr << "error: " << e.what() << " (raise --cap)\n";
        return 2;
    } catch (const sc::Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
