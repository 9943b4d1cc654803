/*
   Copyright 2026 The infmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "infmod/cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "infmod/cli/matrix_io.hpp"
#include "infmod/corpus.hpp"
#include "infmod/hom.hpp"
#include "infmod/infinity.hpp"
#include "infmod/ratmat.hpp"
#include "infmod/realization.hpp"
#include "infmod/umodule.hpp"

namespace infmod::cli {

namespace {

struct Options {
    std::string field_tag;
    std::uint64_t seed = 0;
    std::string output;
    std::string output_dir;
    bool fault = false;
};

// Inputs of one command, read and mapped into a common field.
struct Inputs {
    std::vector<RatMatrix> matrices;
    Field field;
    std::string hash;
};

struct Result {
    explicit Result(Json d = Json::object()) : doc(std::move(d)) {}
    Json doc;
    bool verified = true;
    std::vector<std::pair<std::string, Json>> files;  // written under --output-dir
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<Field> forced_field(const Options& o) {
    if (o.field_tag.empty()) return std::nullopt;
    try {
        return Field::parse_tag(o.field_tag);
    } catch (const std::invalid_argument& e) {
        throw ParseError("--field", e.what());
    }
}

Inputs load(const Options& o, const std::vector<std::string>& paths) {
    const auto forced = forced_field(o);
    Inputs in;
    std::string canonical;
    std::optional<Field> field = forced;
    for (const auto& path : paths) {
        ParsedMatrix p;
        try {
            p = parse_matrix(read_file(path), forced);
        } catch (const ParseError& e) {
            throw ParseError(path + " " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
        }
        if (field && !(*field == p.field))
            throw PreconditionError("input " + path + " is over " + p.field.tag() + " but earlier inputs are over " + field->tag());
        field = p.field;
        canonical += emit_matrix(p.matrix, p.field);
        in.matrices.push_back(std::move(p.matrix));
    }
    in.field = field.value_or(Field::rationals());
    in.hash = "fnv1a64:" + fnv1a_hex(canonical);
    return in;
}

Json header(const std::string& command, const Inputs& in) {
    Json doc;
    doc["command"] = command;
    doc["field"] = in.field.tag();
    doc["input_hash"] = in.hash;
    return doc;
}

Json int_list(const std::vector<int>& v) { return Json(v); }

PolyMatrix polynomial_input(const RatMatrix& m, const char* what) {
    try {
        return to_polynomial(m);
    } catch (const PreconditionError&) {
        throw PreconditionError(std::string(what) + " must be a polynomial matrix");
    }
}

// Columns of reps side by side.
PolyMatrix rep_matrix(const UBasis& b) {
    PolyMatrix m(b.module().size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) m.set_block(0, j, b.elements()[j].rep());
    return m;
}

RatMatrix preimage_matrix(const UBasis& b) {
    RatMatrix m(b.module().size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) m.set_block(0, j, b.preimages()[j]);
    return m;
}

bool in_span(const std::vector<ScalarMatrix>& space, const ScalarMatrix& h) {
    const std::size_t r = h.rows();
    const std::size_t c = h.cols();
    ScalarMatrix flat(r * c, space.size() + 1);
    for (std::size_t k = 0; k <= space.size(); ++k) {
        const ScalarMatrix& m = k < space.size() ? space[k] : h;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) flat(i * c + j, k) = m(i, j);
    }
    return rank(flat) == rank(flat.block(0, 0, r * c, space.size()));
}

Result cmd_structure(const Inputs& in) {
    const PolyMatrix l = polynomial_input(in.matrices[0], "L");
    require_nonsingular(l);
    const RatMatrix w = shift_by(to_rational(l), -1);
    auto f = smith_at_infinity(w);
    const auto& a = f.profile.alphas;
    Result r{header("structure", in)};
    r.doc["n"] = l.rows();
    r.doc["alphas"] = int_list(a);
    r.doc["betas"] = int_list(f.profile.betas);
    r.doc["dim"] = std::accumulate(a.begin(), a.end(), 0);
    r.verified = verify_factorization(f, w);
    return r;
}

Result cmd_smith(const Inputs& in, const std::string& pivot) {
    const RatMatrix& w = in.matrices[0];
    auto f = smith_at_infinity(w, pivot == "column-major" ? PivotOrder::column_major : PivotOrder::row_major);
    Result r{header("smith-inf", in)};
    r.doc["pivot_order"] = pivot;
    r.doc["alphas"] = int_list(f.profile.alphas);
    r.doc["betas"] = int_list(f.profile.betas);
    r.doc["rank"] = f.profile.rank();
    r.doc["P"] = matrix_to_json(f.P, in.field);
    r.doc["Sigma"] = matrix_to_json(f.Sigma, in.field);
    r.doc["Q"] = matrix_to_json(f.Q, in.field);
    r.verified = verify_factorization(f, w) && f.profile == minor_valuation_profile(w);
    r.files = {{"P", r.doc["P"]}, {"Sigma", r.doc["Sigma"]}, {"Q", r.doc["Q"]}};
    return r;
}

Result cmd_basis(const Inputs& in) {
    const PolyMatrix l = polynomial_input(in.matrices[0], "L");
    UModule m(l);
    UBasis b = compute_basis(m);
    UBasis bt = compute_basis(m.transposed());
    const auto alphas = infinite_elementary_divisors(l);
    const ScalarMatrix gram = gram_matrix(bt, b);
    Result r{header("basis", in)};
    r.doc["dim"] = b.size();
    r.doc["alphas"] = int_list(alphas);
    r.doc["truncation_bound"] = m.truncation_bound() ? Json(*m.truncation_bound()) : Json(nullptr);
    r.doc["reps"] = matrix_to_json(rep_matrix(b), in.field);
    r.doc["preimages"] = matrix_to_json(preimage_matrix(b), in.field);
    r.doc["shift"] = matrix_to_json(b.shift(), in.field);
    r.doc["dual_preimages"] = matrix_to_json(preimage_matrix(bt), in.field);
    r.doc["gram"] = matrix_to_json(gram, in.field);
    r.doc["jordan_blocks"] = int_list(jordan_block_sizes(b.shift()));
    r.verified = jordan_block_sizes(b.shift()) == alphas && (b.size() == 0 || rank(gram) == b.size());
    return r;
}

Result cmd_rho(const Inputs& in, bool extended) {
    const PolyMatrix l = polynomial_input(in.matrices[0], "L");
    UModule m(l);
    UElement u = extended ? rho_e(m, in.matrices[1]) : rho(m, in.matrices[1]);
    Result r{header("rho", in)};
    r.doc["extended"] = extended;
    r.doc["rep"] = matrix_to_json(u.rep(), in.field);
    r.doc["zero_class"] = u.is_zero();
    r.verified = rho_e(m, to_rational(u.rep())) == u;
    return r;
}

struct HomInputs {
    PolyMatrix l, l1;
    RatMatrix theta;
    std::optional<RatMatrix> theta1;
};

HomInputs hom_inputs(const Inputs& in) {
    HomInputs h{polynomial_input(in.matrices[0], "L"), polynomial_input(in.matrices[1], "L1"), in.matrices[2], std::nullopt};
    if (in.matrices.size() > 3) h.theta1 = in.matrices[3];
    return h;
}

Intertwiner make_intertwiner(const HomInputs& h) {
    UModule src(h.l);
    UModule dst(h.l1);
    if (h.theta1) return {src, dst, h.theta, *h.theta1};
    return Intertwiner::from_theta(src, dst, h.theta);
}

Result cmd_hom(const std::string& action, const Inputs& in) {
    const HomInputs h = hom_inputs(in);
    Result r{header("hom " + action, in)};
    if (action == "check") {
        require_nonsingular(h.l, "L");
        require_nonsingular(h.l1, "L1");
        const RatMatrix theta1 = h.theta1 ? *h.theta1 : inverse(h.l1) * h.theta * to_rational(h.l);
        const bool intertwining = check_intertwining(h.theta, theta1, h.l, h.l1);
        const bool alt = alt_condition_check(h.theta, theta1, h.l, h.l1);
        const bool incl = is_proper(h.theta) && kernel_inclusion_check(h.theta, h.l, h.l1);
        r.doc["theta1_given"] = h.theta1.has_value();
        r.doc["intertwining"] = intertwining;
        r.doc["alt_condition"] = alt;
        r.doc["kernel_inclusion"] = incl;
        r.verified = !intertwining || (alt && incl);
        return r;
    }
    if (action == "complete") {
        auto c = complete_intertwiner(h.theta, h.l, h.l1);
        r.doc["psi"] = matrix_to_json(c.psi, in.field);
        r.doc["theta1"] = matrix_to_json(c.theta1, in.field);
        r.doc["theta_adjusted"] = matrix_to_json(c.theta_adjusted, in.field);
        r.verified = verify_completion(c, h.theta, h.l, h.l1);
        return r;
    }
    const Intertwiner iw = make_intertwiner(h);
    if (action == "dual") {
        const Intertwiner d = dual_intertwiner(iw);
        r.doc["source"] = matrix_to_json(d.source().matrix(), in.field);
        r.doc["target"] = matrix_to_json(d.target().matrix(), in.field);
        r.doc["theta"] = matrix_to_json(d.theta(), in.field);
        r.doc["theta1"] = matrix_to_json(d.theta1(), in.field);
        r.verified = check_intertwining(d.theta(), d.theta1(), d.source().matrix(), d.target().matrix());
        return r;
    }
    UBasis b = compute_basis(iw.source());
    UBasis b1 = compute_basis(iw.target());
    const ScalarMatrix hm = hom_matrix(iw, b, b1);
    if (action == "build") {
        r.doc["source_dim"] = b.size();
        r.doc["target_dim"] = b1.size();
        r.doc["source_reps"] = matrix_to_json(rep_matrix(b), in.field);
        r.doc["target_reps"] = matrix_to_json(rep_matrix(b1), in.field);
        r.doc["matrix"] = matrix_to_json(hm, in.field);
        r.verified = hm * b.shift() == b1.shift() * hm && in_span(hom_space_oracle(b, b1), hm);
        return r;
    }
    const bool surj = action == "surjective";
    const CoprimeCertificate cert = surj ? left_coprime(iw.theta(), shift_by(to_rational(iw.target().matrix()), -1))
                                         : left_coprime(iw.theta1().transpose(), shift_by(to_rational(iw.source().matrix().transpose()), -1));
    const std::size_t rk = rank(hm);
    r.doc["verdict"] = cert.verdict;
    r.doc["reason"] = cert.reason;
    r.doc["matrix_rank"] = rk;
    r.doc["source_dim"] = b.size();
    r.doc["target_dim"] = b1.size();
    if (cert.C) r.doc["C"] = matrix_to_json(*cert.C, in.field);
    if (cert.D) r.doc["D"] = matrix_to_json(*cert.D, in.field);
    r.verified = cert.verdict == (rk == (surj ? b1.size() : b.size()));
    return r;
}

Result cmd_exists(const Inputs& in, const std::string& direction) {
    const PolyMatrix l = polynomial_input(in.matrices[0], "L");
    const PolyMatrix l1 = polynomial_input(in.matrices[1], "L1");
    const auto alphas = infinite_elementary_divisors(l);
    const auto gammas = infinite_elementary_divisors(l1);
    Result r{header("exists-hom", in)};
    r.doc["direction"] = direction;
    r.doc["alphas"] = int_list(alphas);
    r.doc["gammas"] = int_list(gammas);
    r.doc["verdict"] = direction == "surj" ? exists_surjective(alphas, gammas) : exists_injective(alphas, gammas);
    return r;
}

Result cmd_realize(const Inputs& in) {
    const RatMatrix& g = in.matrices[0];
    Rlz2 split = canonical_split(g);
    GssRealization real = realize_plus(split);
    const bool markov = verify_markov(split, real);
    Result r{header("realize", in)};
    r.doc["W2"] = matrix_to_json(split.W2, in.field);
    r.doc["P2"] = matrix_to_json(split.P2, in.field);
    r.doc["D2"] = matrix_to_json(split.D2, in.field);
    r.doc["Q2"] = matrix_to_json(split.Q2, in.field);
    r.doc["dim"] = real.basis.size();
    r.doc["basis_reps"] = matrix_to_json(rep_matrix(real.basis), in.field);
    r.doc["N2"] = matrix_to_json(real.N2, in.field);
    r.doc["B2"] = matrix_to_json(real.B2, in.field);
    r.doc["C2"] = matrix_to_json(real.C2, in.field);
    r.doc["markov"] = markov;
    r.verified = markov && verify_split(split, g);
    for (const char* k : {"W2", "P2", "D2", "Q2", "N2", "B2", "C2"}) r.files.emplace_back(k, r.doc[k]);
    return r;
}

Result cmd_gen(const Options& o, const std::string& kind, std::size_t n, int degree) {
    const auto forced = forced_field(o);
    const Field f = forced.value_or(Field::rationals());
    corpus::Rng rng(o.seed);
    Result r;
    r.doc["command"] = "gen";
    r.doc["field"] = f.tag();
    r.doc["kind"] = kind;
    r.doc["seed"] = o.seed;
    Json mats;
    if (kind == "nonsingular") {
        mats["L"] = matrix_to_json(corpus::random_nonsingular(rng, f, n, degree), f);
    } else if (kind == "pencil") {
        auto p = corpus::random_pencil(rng, f, n);
        mats["L"] = matrix_to_json(p.l, f);
        mats["dual"] = matrix_to_json(p.dual, f);
    } else if (kind == "transfer") {
        mats["G"] = matrix_to_json(corpus::random_transfer(rng, f, n, n, degree), f);
    } else {
        auto s = corpus::random_intertwiner(rng, f);
        r.doc["family"] = s.family;
        mats["L"] = matrix_to_json(s.l, f);
        mats["L1"] = matrix_to_json(s.l1, f);
        mats["Theta"] = matrix_to_json(s.theta, f);
        mats["Theta1"] = matrix_to_json(s.theta1, f);
        mats["RawTheta"] = matrix_to_json(s.raw_theta, f);
    }
    for (const auto& [k, v] : mats.items()) r.files.emplace_back(k, v);
    r.doc["matrices"] = std::move(mats);
    return r;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

int finish(const Options& o, Result r, std::ostream& out, std::ostream& err) {
    if (o.fault) r.verified = false;
    r.doc["verified"] = r.verified;
    const std::string text = dump(r.doc);
    if (o.output.empty())
        out << text;
    else
        write_text(o.output, text);
    if (!o.output_dir.empty()) {
        std::filesystem::create_directories(o.output_dir);
        for (const auto& [name, doc] : r.files) write_text(std::filesystem::path(o.output_dir) / (name + ".json"), dump(doc));
    }
    if (!r.verified) {
        err << "error: verification failed for '" << r.doc["command"].get<std::string>() << "'\n";
        return kVerificationError;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structure at infinity of polynomial matrices and their modules"};
    app.name("infmod");
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field_tag, "Base field: Q or GF:<p>; overrides the field declared in input files");
    app.add_option("--seed", o.seed, "Seed for corpus generation");
    app.add_option("-o,--output", o.output, "Write the result document to this file instead of stdout");
    app.add_option("--output-dir", o.output_dir, "Also write each emitted matrix as <name>.json in this directory");
    app.add_flag("--fault-inject", o.fault)->group("");

    std::function<Result()> action;
    std::vector<std::string> paths;

    auto* structure = app.add_subcommand("structure", "Infinite elementary divisors and dim U^L");
    structure->add_option("L", paths, "Nonsingular polynomial matrix")->required()->expected(1);
    structure->callback([&] { action = [&] { return cmd_structure(load(o, paths)); }; });

    std::string pivot = "row-major";
    auto* smith = app.add_subcommand("smith-inf", "Smith form over the proper rational functions");
    smith->add_option("W", paths, "Rational matrix")->required()->expected(1);
    smith->add_option("--pivot", pivot, "Tie-break rule")->check(CLI::IsMember({"row-major", "column-major"}));
    smith->callback([&] { action = [&] { return cmd_smith(load(o, paths), pivot); }; });

    auto* basis = app.add_subcommand("basis", "Basis, shift and Gram matrix of U^L");
    basis->add_option("L", paths, "Nonsingular polynomial matrix")->required()->expected(1);
    basis->callback([&] { action = [&] { return cmd_basis(load(o, paths)); }; });

    bool extended = false;
    auto* rho_cmd = app.add_subcommand("rho", "Canonical representative L pi_plus(L^-1 x)");
    rho_cmd->add_option("files", paths, "L and the column x")->required()->expected(2);
    rho_cmd->add_flag("--extended", extended, "Accept an arbitrary rational column");
    rho_cmd->callback([&] { action = [&] { return cmd_rho(load(o, paths), extended); }; });

    auto* hom = app.add_subcommand("hom", "Homomorphisms U^L -> U^L1");
    hom->require_subcommand(1);
    for (const char* name : {"check", "build", "complete", "dual", "surjective", "injective"}) {
        auto* sub = hom->add_subcommand(name, std::string("hom ") + name);
        const int max_files = std::string(name) == "complete" ? 3 : 4;
        sub->add_option("files", paths, "L L1 Theta [Theta1]")->required()->expected(3, max_files);
        sub->callback([&, action_name = std::string(name)] { action = [&, action_name] { return cmd_hom(action_name, load(o, paths)); }; });
    }

    std::string direction;
    auto* exists = app.add_subcommand("exists-hom", "Existence of a surjection or injection U^L -> U^L1");
    exists->add_option("files", paths, "L L1")->required()->expected(2);
    exists->add_option("--direction", direction, "surj or inj")->required()->check(CLI::IsMember({"surj", "inj"}));
    exists->callback([&] { action = [&] { return cmd_exists(load(o, paths), direction); }; });

    auto* realize = app.add_subcommand("realize", "Realization of the polynomial part of G");
    realize->add_option("G", paths, "Rational matrix")->required()->expected(1);
    realize->callback([&] { action = [&] { return cmd_realize(load(o, paths)); }; });

    std::string kind = "nonsingular";
    std::size_t gen_n = 2;
    int gen_degree = 2;
    auto* gen = app.add_subcommand("gen", "Seeded random instance");
    gen->add_option("kind", kind, "nonsingular, pencil, transfer or intertwiner")
        ->check(CLI::IsMember({"nonsingular", "pencil", "transfer", "intertwiner"}));
    gen->add_option("--n", gen_n, "Size")->check(CLI::Range(1, 6));
    gen->add_option("--degree", gen_degree, "Entry degree bound")->check(CLI::Range(0, 6));
    gen->callback([&] { action = [&] { return cmd_gen(o, kind, gen_n, gen_degree); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        return finish(o, action(), out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const std::domain_error& e) {
        err << "precondition violated: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationError;
    }
}

}  // namespace infmod::cli
