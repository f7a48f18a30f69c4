#include "heegaard/cli.hpp"

#include "heegaard/qsearch.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

namespace heegaard {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Kind { word, integer, colon, semicolon, end };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line, col = column;
        if (c == ':' || c == ';') {
            tokens.push_back({c == ':' ? Token::Kind::colon : Token::Kind::semicolon, std::string(1, c), l, col});
            advance(1);
            continue;
        }
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i + 1 && !std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError(l, col, "sign without digits");
            tokens.push_back({Token::Kind::integer, std::string(text.substr(i, j - i)), l, col});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            tokens.push_back({Token::Kind::word, std::string(text.substr(i, j - i)), l, col});
            advance(j - i);
            continue;
        }
        throw ParseError(l, col, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back({Token::Kind::end, "", line, column});
    return tokens;
}

class DiagramParser {
public:
    explicit DiagramParser(std::string_view text) : tokens_(tokenize(text)) {}

    HeegaardDiagramH1 parse() {
        expect_word("genus");
        const Token& gt = next();
        if (gt.kind != Token::Kind::integer) fail(gt, "expected the genus after 'genus'");
        const Int g = Int(gt.text[0] == '+' ? gt.text.substr(1) : gt.text);
        if (g < 0 || g > 1000) fail(gt, "genus must be between 0 and 1000");
        genus_ = static_cast<std::size_t>(g);
        IntMatrix minus = rows("minus");
        IntMatrix plus = rows("plus");
        if (peek().kind != Token::Kind::end) fail(peek(), "unexpected '" + peek().text + "' after plus rows");
        return HeegaardDiagramH1(lagrangian("minus", std::move(minus)), lagrangian("plus", std::move(plus)));
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] static void fail(const Token& t, const std::string& what) { throw ParseError(t.line, t.column, what); }

    void expect_word(const std::string& w) {
        const Token& t = next();
        if (t.kind != Token::Kind::word || t.text != w)
            fail(t, "expected '" + w + "'" + (t.kind == Token::Kind::end ? " before end of input" : ", found '" + t.text + "'"));
    }

    IntMatrix rows(const std::string& name) {
        expect_word(name);
        const Token& colon = next();
        if (colon.kind != Token::Kind::colon) fail(colon, "expected ':' after '" + name + "'");
        const std::size_t width = 2 * genus_;
        std::vector<IntVector> out;
        IntVector current;
        const Token* row_start = &peek();
        auto close_row = [&](const Token& at) {
            if (current.size() != width)
                fail(*row_start, name + " row " + std::to_string(out.size() + 1) + " has " +
                                     std::to_string(current.size()) + " entries, expected " + std::to_string(width));
            out.push_back(std::move(current));
            current.clear();
            row_start = &at;
        };
        for (;;) {
            const Token& t = peek();
            if (t.kind == Token::Kind::integer) {
                current.emplace_back(t.text[0] == '+' ? t.text.substr(1) : t.text);
                ++pos_;
            } else if (t.kind == Token::Kind::semicolon) {
                ++pos_;
                close_row(peek());
            } else if (t.kind == Token::Kind::word && !(name == "minus" && t.text == "plus")) {
                fail(t, "expected an integer in " + name + " rows, found '" + t.text + "'");
            } else {
                break;
            }
        }
        if (!current.empty()) close_row(peek());
        if (out.size() != genus_)
            fail(*row_start, name + " has " + std::to_string(out.size()) + " rows, expected " + std::to_string(genus_));
        return IntMatrix::from_rows(out, width);
    }

    Lagrangian lagrangian(const std::string& name, IntMatrix m) const {
        if (auto why = lagrangian_violation(m, genus_))
            throw std::invalid_argument(name + " is not a Lagrangian: " + *why);
        return Lagrangian(genus_, std::move(m));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t genus_ = 0;
};

}  // namespace

HeegaardDiagramH1 parse_diagram(std::string_view text) { return DiagramParser(text).parse(); }

std::string serialize_diagram(const HeegaardDiagramH1& d) {
    std::ostringstream os;
    os << "genus " << d.genus() << '\n';
    auto rows = [&](const char* name, const Lagrangian& l) {
        os << name << ':';
        for (std::size_t i = 0; i < d.genus(); ++i) {
            if (i > 0) os << " ;";
            for (const auto& x : l.row(i)) os << ' ' << x;
        }
        os << '\n';
    };
    rows("minus", d.minus());
    rows("plus", d.plus());
    return os.str();
}

Json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Json vector_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

namespace {

Json matrix_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
    return a;
}

Json gram_json(const std::vector<std::vector<QmodZ>>& gram) {
    Json a = Json::array();
    for (const auto& row : gram) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        a.push_back(std::move(r));
    }
    return a;
}

Json classes_json(const std::vector<TorsionClass>& classes) {
    Json a = Json::array();
    for (const auto& c : classes) {
        Json o;
        o["representative"] = vector_json(c.representative);
        o["order"] = int_json(c.order);
        a.push_back(std::move(o));
    }
    return a;
}

Json group_json(const AbelianGroup& h) {
    Json o;
    o["group"] = h.to_string();
    o["free_rank"] = h.free_rank;
    o["invariant_factors"] = vector_json(h.invariant_factors);
    return o;
}

}  // namespace

Json diagram_json(const HeegaardDiagramH1& d) {
    Json o;
    o["genus"] = d.genus();
    o["minus"] = matrix_json(d.minus().rows());
    o["plus"] = matrix_json(d.plus().rows());
    return o;
}

Json homology_json(const HeegaardDiagramH1& d, const std::string& input) {
    const AbelianGroup h = first_homology(d);
    Json o;
    o["input"] = input;
    o["genus"] = d.genus();
    o["H1"] = group_json(h);
    o["torsion_order"] = int_json(h.torsion_order());
    o["torsion_order_is_square"] = is_perfect_square(h.torsion_order());
    return o;
}

Json linkform_json(const HeegaardDiagramH1& d, const std::string& input) {
    const auto gens = torsion_generators(d);
    const LinkingForm lf = linking_form(d);
    Json o;
    o["input"] = input;
    o["genus"] = d.genus();
    o["invariant_factors"] = vector_json(lf.invariant_factors);
    o["generators"] = classes_json(gens);
    o["gram"] = gram_json(lf.gram);
    return o;
}

Json diagonalize_json(const HeegaardDiagramH1& d, const std::string& input) {
    const DiagonalPresentation p = diagonalize(d);
    Json o;
    o["input"] = input;
    o["genus"] = d.genus();
    o["boundary_diagonal"] = vector_json(p.boundary_diagonal);
    Json pairs = Json::array();
    for (const auto& [pi, qi] : p.pairs) {
        Json e;
        e["p"] = int_json(pi);
        e["q"] = int_json(qi);
        e["value"] = QmodZ(qi, pi).to_string();
        pairs.push_back(std::move(e));
    }
    o["pairs"] = std::move(pairs);
    Json residual;
    residual["orders"] = vector_json(p.residual_orders);
    residual["gram"] = gram_json(p.residual_gram);
    o["residual"] = std::move(residual);
    o["fully_diagonal"] = p.fully_diagonal();
    o["congruence_moves"] = p.congruence_moves;
    o["pairs_off_hyperbolically"] = pairs_off_hyperbolically(p);
    return o;
}

Json build_report(const HeegaardDiagramH1& d, const std::string& input, std::int64_t bound, unsigned threads) {
    const HduVerdict v = hdu_verdict(d, bound, threads);
    const AbelianGroup& h = v.homology;
    const Int t = h.torsion_order();
    const auto gens = torsion_generators(d);
    const LinkingForm lf = linking_form(d);
    const auto& split = v.split;

    Json o;
    o["input"] = input;
    o["genus"] = d.genus();
    o["H1"] = group_json(h);
    o["torsion_order"] = int_json(t);
    o["torsion_order_is_square"] = is_perfect_square(t);
    Json form;
    form["invariant_factors"] = vector_json(lf.invariant_factors);
    form["gram"] = gram_json(lf.gram);
    o["linking_form"] = std::move(form);
    o["hyperbolic"] = split.has_value();
    if (split) {
        Json s;
        s["A"] = classes_json(realize(d, gens, split->generators_a));
        s["B"] = classes_json(realize(d, gens, split->generators_b));
        o["split"] = std::move(s);
    } else {
        o["split"] = nullptr;
    }
    o["integral_homology_sphere"] = v.integral_homology_sphere;
    o["z2_homology_sphere"] = v.z2_homology_sphere;
    o["hdu"] = to_string(v.hdu);
    if (v.z2_homology_sphere) o["HDU_DIAGRAM_EXISTS"] = v.hdu == HduStatus::exists;
    o["hyperbolicity_bound"] = bound;
    o["verdict"] = split ? "PASSES_HANTZSCHE" : "OBSTRUCTED";
    return o;
}

Json search_q_json(const SymplecticMap& theta, const std::string& theta_name, std::int64_t entries,
                   unsigned threads) {
    const QSearchResult r = question_q_search(theta, entries, threads);
    Json o;
    o["theta"] = theta_name;
    o["theta_matrix"] = matrix_json(theta.matrix());
    o["genus"] = theta.genus();
    o["entries"] = entries;
    o["status"] = r.status == QSearchResult::Status::found ? "found" : "exhausted";
    if (r.witness) {
        Json w;
        w["lagrangian"] = matrix_json(r.witness->rows());
        w["torsion_order"] = int_json(r.witness_torsion);
        o["witness"] = std::move(w);
    } else {
        o["witness"] = nullptr;
    }
    o["candidates"] = r.candidates;
    o["examined"] = r.examined;
    o["positive_free_rank"] = r.zero_count;
    return o;
}

Json ub0_json(const SymplecticMap& theta, const std::string& theta_name, std::int64_t bound) {
    const auto form = genus1_torsion_form(theta);
    const Ub0Scan scan = ub0_scan(theta, bound);
    auto entries_json = [](const std::vector<Ub0Entry>& v) {
        Json a = Json::array();
        for (const auto& e : v) a.push_back(Json::array({int_json(e.a), int_json(e.b), int_json(e.torsion)}));
        return a;
    };
    Json o;
    o["theta"] = theta_name;
    o["theta_matrix"] = matrix_json(theta.matrix());
    o["torsion_form"] = Json::array({int_json(form[0]), int_json(form[1]), int_json(form[2])});
    o["bound"] = bound;
    o["examined"] = scan.examined;
    o["square"] = entries_json(scan.squares);
    o["zero"] = entries_json(scan.zeros);
    o["ub0_holds_to_bound"] = scan.squares.empty();
    return o;
}

std::string render_text(const Json& j) {
    std::ostringstream os;
    for (const auto& [key, value] : j.items()) {
        os << key << ": ";
        if (value.is_string())
            os << value.get<std::string>();
        else
            os << value.dump();
        os << '\n';
    }
    return os.str();
}

namespace {

struct Input {
    std::string file;
    std::vector<std::int64_t> lens_args;
    bool connect_mirror = false;
};

struct Loaded {
    HeegaardDiagramH1 diagram;
    std::string description;
};

std::string read_source(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

Loaded load_file(const std::string& path) {
    try {
        return {parse_diagram(read_source(path)), path};
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

Loaded load(const Input& in) {
    if (!in.lens_args.empty() && !in.file.empty())
        throw std::invalid_argument("give either a diagram file or --lens, not both");
    Loaded l{HeegaardDiagramH1::empty(), ""};
    if (!in.lens_args.empty()) {
        l = {lens(in.lens_args[0], in.lens_args[1]),
             "lens(" + std::to_string(in.lens_args[0]) + "," + std::to_string(in.lens_args[1]) + ")"};
    } else if (!in.file.empty()) {
        l = load_file(in.file);
    } else {
        throw std::invalid_argument("no input diagram: give a file (or '-') or --lens p q");
    }
    if (in.connect_mirror) {
        l.diagram = connected_sum(l.diagram, mirror(l.diagram));
        l.description += " # mirror(" + l.description + ")";
    }
    return l;
}

SymplecticMap parse_theta(const std::string& name, const std::string& matrix, std::size_t genus) {
    if (name != "matrix") {
        if (!matrix.empty()) throw std::invalid_argument("--matrix requires --theta matrix");
        return named_map(name, genus);
    }
    std::istringstream is(matrix);
    std::vector<Int> entries;
    std::string tok;
    while (is >> tok) {
        try {
            entries.emplace_back(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("--matrix: '" + tok + "' is not an integer");
        }
    }
    const std::size_t n = 2 * genus;
    if (entries.size() != n * n)
        throw std::invalid_argument("--matrix: expected " + std::to_string(n * n) + " entries for genus " +
                                    std::to_string(genus) + ", got " + std::to_string(entries.size()));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entries[i * n + j];
    return SymplecticMap(genus, std::move(m));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heegaard diagram homology, linking forms and embedding obstructions", "heegaard"};
    app.require_subcommand(1);

    std::string format = "json";
    std::int64_t bound = kDefaultHyperbolicBound;
    unsigned threads = 1;
    Input input;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", input.file, "Diagram file, or - for standard input");
        sub->add_option("--lens", input.lens_args, "Use lens(p, q) as input")->expected(2);
        sub->add_flag("--connect-mirror", input.connect_mirror, "Use D # mirror(D)");
        add_common(sub);
    };
    auto add_bound = [&](CLI::App* sub) {
        return sub->add_option("--bound", bound, "Largest torsion order searched exhaustively")
            ->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "Check a diagram file");
    add_input(validate);
    auto* homology = app.add_subcommand("homology", "First homology and torsion order");
    add_input(homology);
    auto* linkform = app.add_subcommand("linkform", "Linking form on torsion generators");
    add_input(linkform);
    auto* report = app.add_subcommand("report", "Full embedding-obstruction report");
    add_input(report);
    add_bound(report);
    auto* diag = app.add_subcommand("diagonalize", "Diagonal presentation of the linking form");
    add_input(diag);

    std::string theta_name = "rotation", theta_matrix;
    std::size_t genus = 1;
    std::int64_t entries = 1;
    auto* search = app.add_subcommand("search-q", "Search for a Lagrangian L with non-square torsion of L + theta L");
    search->add_option("--theta", theta_name, "rotation, shear, identity, ub0 or matrix");
    search->add_option("--matrix", theta_matrix, "Row-major entries of theta when --theta matrix");
    search->add_option("--genus", genus, "Genus")->check(CLI::PositiveNumber);
    auto* entries_opt = search->add_option("--entries", entries, "Entry bound N")->check(CLI::PositiveNumber);
    auto* search_bound = add_bound(search)->description("Alias for --entries");
    add_common(search);

    std::int64_t ub0_bound = 50;
    auto* ub0 = app.add_subcommand("ub0", "Primitive (a, b) with square genus-1 torsion");
    ub0->add_option("--theta", theta_name, "rotation, shear, identity, ub0 or matrix");
    ub0->add_option("--matrix", theta_matrix, "Row-major entries of theta when --theta matrix");
    ub0->add_option("--bound", ub0_bound, "Largest |a|, |b| scanned")->check(CLI::PositiveNumber);
    add_common(ub0);

    std::size_t bar = 0, hat = 0;
    auto* stabilize = app.add_subcommand("stabilize", "Bar- or hat-stabilize a diagram");
    add_input(stabilize);
    auto* bar_opt = stabilize->add_option("--bar", bar, "Handles added by bar-stabilization");
    auto* hat_opt = stabilize->add_option("--hat", hat, "Handles added by hat-stabilization");
    bar_opt->excludes(hat_opt);

    std::vector<std::int64_t> lens_pq;
    auto* lens_cmd = app.add_subcommand("lens", "Genus-1 diagram of lens(p, q)");
    lens_cmd->add_option("pq", lens_pq, "p and q")->expected(2)->required();
    add_common(lens_cmd);

    std::vector<std::string> consum_files;
    auto* consum = app.add_subcommand("consum", "Connected sum of two diagram files");
    consum->add_option("files", consum_files, "Two diagram files")->expected(2)->required();
    add_common(consum);

    auto* fixture_b = app.add_subcommand("fixture-b", "Torus bundle fixture with monodromy -1");
    add_common(fixture_b);
    auto* mirror_cmd = app.add_subcommand("mirror", "Orientation-reversed diagram");
    add_input(mirror_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    bool format_given = false;
    for (const auto* sub : app.get_subcommands())
        if (sub->count("--format") > 0) format_given = true;
    auto emit = [&](const Json& j) {
        if (format == "text")
            out << render_text(j);
        else
            out << j.dump(2) << '\n';
    };
    // Diagram-producing commands default to the diagram text format.
    auto emit_diagram = [&](const HeegaardDiagramH1& d) {
        if (format_given && format == "json")
            out << diagram_json(d).dump(2) << '\n';
        else
            out << serialize_diagram(d);
    };

    try {
        if (validate->parsed()) {
            const Loaded l = load(input);
            Json o;
            o["input"] = l.description;
            o["genus"] = l.diagram.genus();
            o["valid"] = true;
            emit(o);
        } else if (homology->parsed()) {
            const Loaded l = load(input);
            emit(homology_json(l.diagram, l.description));
        } else if (linkform->parsed()) {
            const Loaded l = load(input);
            emit(linkform_json(l.diagram, l.description));
        } else if (report->parsed()) {
            const Loaded l = load(input);
            emit(build_report(l.diagram, l.description, bound, threads));
        } else if (diag->parsed()) {
            const Loaded l = load(input);
            emit(diagonalize_json(l.diagram, l.description));
        } else if (search->parsed()) {
            if (search_bound->count() > 0) {
                if (entries_opt->count() > 0) throw std::invalid_argument("give --entries or --bound, not both");
                entries = bound;
            }
            const SymplecticMap theta = parse_theta(theta_name, theta_matrix, genus);
            emit(search_q_json(theta, theta_name, entries, threads));
        } else if (ub0->parsed()) {
            const SymplecticMap theta = parse_theta(theta_name, theta_matrix, 1);
            emit(ub0_json(theta, theta_name, ub0_bound));
        } else if (stabilize->parsed()) {
            if (bar_opt->count() == 0 && hat_opt->count() == 0) throw std::invalid_argument("give --bar k or --hat k");
            const Loaded l = load(input);
            emit_diagram(bar_opt->count() > 0 ? bar_stabilize(l.diagram, bar) : hat_stabilize(l.diagram, hat));
        } else if (lens_cmd->parsed()) {
            emit_diagram(lens(lens_pq[0], lens_pq[1]));
        } else if (consum->parsed()) {
            emit_diagram(connected_sum(load_file(consum_files[0]).diagram, load_file(consum_files[1]).diagram));
        } else if (fixture_b->parsed()) {
            emit_diagram(b_fixture());
        } else if (mirror_cmd->parsed()) {
            emit_diagram(mirror(load(input).diagram));
        }
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << " (raise --bound)\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace heegaard
