// Command-line surface for the quasi-cyclic Niederreiter toolkit: key
// generation, encryption/decryption, the security-analysis reports, the
// condition verifier, and the brute-force group oracles.
//
// Exit codes: 0 success, 2 parameter error, 3 decode failure,
//             4 cap/budget exceeded, 5 IO error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcnr/qcnr.hpp"

namespace {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof())
        throw io_error("cannot read " + path);
    return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw io_error("cannot open " + path + " for writing");
    out << data;
    if (!out.good())
        throw io_error("cannot write " + path);
}

std::string fmt(double v, int digits = 6) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << v;
    return ss.str();
}

void cmd_keygen(std::size_t p, std::size_t m, unsigned l, std::size_t t, std::uint64_t seed,
                const std::string& out_prefix) {
    const qcnr::qc_params params{l, p, m, t};
    params.validate();
    qcnr::gf field(l);
    qcnr::rng r(seed);
    const qcnr::key_pair kp = qcnr::keygen(field, params, r);
    write_file(out_prefix + ".pub", qcnr::emit_public(kp.pub));
    write_file(out_prefix + ".key", qcnr::emit_private(kp.priv));
    std::cout << "rows=" << p << "\ncols=" << m * p << "\nbits=" << p * m * p * l << "\n";
}

void cmd_encrypt(const std::string& pubfile, const std::string& index_dec,
                 const std::string& x_hex, const std::string& outfile) {
    const qcnr::public_key pk = qcnr::parse_public(read_file(pubfile));
    std::vector<qcnr::fe> x;
    if (!index_dec.empty()) {
        qcnr::bigint idx;
        try {
            idx = qcnr::bigint(index_dec);
        } catch (const std::exception&) {
            throw qcnr::parameter_error("encrypt: --index must be a decimal integer");
        }
        x = qcnr::encode_plaintext(idx, pk.params);
    } else if (!x_hex.empty()) {
        x = qcnr::parse_fe_line(pk.params.l, x_hex + "\n", pk.params.n());
    } else {
        throw qcnr::parameter_error("encrypt: need --index or --x");
    }
    const auto y = qcnr::encrypt(pk, x);
    write_file(outfile, qcnr::emit_fe_line(pk.params.l, y));
}

// returns false on decode failure
bool cmd_decrypt(const std::string& keyfile, const std::string& infile,
                 const std::string& outfile, std::size_t max_iter) {
    const qcnr::private_key sk = qcnr::parse_private(read_file(keyfile));
    const auto y = qcnr::parse_fe_line(sk.params.l, read_file(infile), sk.params.p);
    qcnr::isd_config cfg;
    cfg.max_iterations = max_iter;
    const auto x = qcnr::decrypt(sk, y, cfg);
    if (!x)
        return false;
    write_file(outfile, qcnr::emit_fe_line(sk.params.l, *x));
    if (qcnr::weight_of(*x) == sk.params.t)
        std::cout << "index=" << qcnr::decode_plaintext(*x, sk.params) << "\n";
    return true;
}

void cmd_analyze_table1() {
    struct row {
        unsigned sec;
        std::size_t p, t;
    };
    const row grid[] = {
        {80, 101, 15},  {80, 101, 20},  {80, 211, 35},  {80, 211, 40},
        {100, 101, 15}, {100, 101, 20}, {100, 211, 35}, {100, 211, 40},
        {120, 101, 15}, {120, 101, 20}, {120, 211, 35}, {120, 211, 40},
        {256, 211, 35}, {256, 211, 40},
    };
    std::cout << std::left << std::setw(9) << "security" << std::setw(5) << "p" << std::setw(4)
              << "t" << std::setw(5) << "m_C" << std::setw(5) << "m_Q" << std::setw(5) << "m"
              << std::setw(6) << "rows" << std::setw(7) << "cols" << "rate\n";
    for (const auto& g : grid) {
        const std::size_t mc = qcnr::min_m_classical(g.p, g.t, g.sec);
        const std::size_t mq = qcnr::min_m_quantum(g.p);
        const std::size_t m = std::max(mc, mq);
        const double rate = qcnr::info_rate({g.p, m, g.t, 3});
        std::cout << std::left << std::setw(9) << g.sec << std::setw(5) << g.p << std::setw(4)
                  << g.t << std::setw(5) << mc << std::setw(5) << mq << std::setw(5) << m
                  << std::setw(6) << g.p << std::setw(7) << m * g.p << fmt(rate, 2) << "\n";
    }
    std::cout << "# probability-of-success column: needs an external estimator, not reproducible here\n";
}

qcnr::parity_check oracle_instance(std::size_t p, std::size_t m, unsigned l, std::size_t t,
                                   std::uint64_t seed) {
    const qcnr::qc_params params{l, p, m, t};
    params.validate();
    qcnr::gf field(l);
    qcnr::rng r(seed);
    return qcnr::build_parity_check(field, params, r);
}

void print_aut_report(const qcnr::aut_report& rep) {
    std::cout << "aut_size=" << rep.aut_size << "\n"
              << "t_set_size=" << rep.t_set_size << "\n"
              << "minimal_degree=" << rep.minimal_degree << "\n"
              << "mu_in_t_set=" << (rep.mu_in_t_set ? "true" : "false") << "\n"
              << "two_transitive=" << (rep.two_transitive ? "true" : "false") << "\n"
              << "block_diagonal_all=" << (rep.block_diagonal_all ? "true" : "false") << "\n";
}

void print_condition_report(const qcnr::condition_report& rep) {
    const auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
    std::cout << "I=" << pf(rep.block_sizes) << "\n"
              << "II=" << pf(rep.shape) << "\n"
              << "III=" << pf(rep.nonbinary_blocks) << "\n"
              << "IV'=" << pf(rep.marked_pair) << "\n"
              << "V=" << pf(rep.distinct_columns) << "\n"
              << "overall=" << (rep.pass() ? "pass" : "fail") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Niederreiter cryptosystem over quasi-cyclic (m-1)/m codes"};
    app.require_subcommand(1);

    std::size_t p = 0, m = 0, t = 1, bits = 80, max_iter = 2000, cap = 5040;
    unsigned l = 2;
    std::uint64_t seed = 0, aut_size = 0;
    double delta = 1.0, a_const = 0.249;
    std::string out, pubfile, keyfile, infile, index_dec, x_hex;
    bool full_sweep = false;

    const auto add_seed = [&](CLI::App* c) {
        c->add_option("--seed", seed, "deterministic seed")->envname("QCNR_SEED");
    };

    // keygen
    auto* kg = app.add_subcommand("keygen", "generate a key pair");
    kg->add_option("--p", p, "prime block size")->required();
    kg->add_option("--m", m, "block count")->required();
    kg->add_option("--l", l, "field degree (F_{2^l})")->required();
    kg->add_option("--t", t, "error weight")->required();
    add_seed(kg);
    kg->add_option("--out", out, "output prefix (.pub/.key)")->required();
    kg->callback([&] { cmd_keygen(p, m, l, t, seed, out); });

    // encrypt
    auto* enc = app.add_subcommand("encrypt", "encrypt a plaintext index or hex vector");
    enc->add_option("--pub", pubfile, "public key file")->required();
    enc->add_option("--index", index_dec, "plaintext index (decimal)");
    enc->add_option("--x", x_hex, "plaintext as fixed-width hex");
    enc->add_option("--out", out, "ciphertext file")->required();
    enc->callback([&] { cmd_encrypt(pubfile, index_dec, x_hex, out); });

    // decrypt
    int decrypt_status = 0;
    auto* dec = app.add_subcommand("decrypt", "decrypt a ciphertext file");
    dec->add_option("--key", keyfile, "private key file")->required();
    dec->add_option("--in", infile, "ciphertext file")->required();
    dec->add_option("--out", out, "plaintext file")->required();
    dec->add_option("--max-iter", max_iter, "ISD iteration budget");
    dec->callback([&] {
        if (!cmd_decrypt(keyfile, infile, out, max_iter)) {
            std::cerr << "decryption failure: no weight-<=t preimage found\n";
            decrypt_status = 3;
        }
    });

    // analyze
    auto* an = app.add_subcommand("analyze", "security and rate reports");
    an->require_subcommand(1);

    auto* wf = an->add_subcommand("workfactor", "log2 Lee-Brickell work factor");
    wf->add_option("--p", p)->required();
    wf->add_option("--m", m)->required();
    wf->add_option("--t", t)->required();
    wf->callback(
        [&] { std::cout << "log2_workfactor=" << fmt(qcnr::work_factor_log2({p, m, t})) << "\n"; });

    auto* rt = an->add_subcommand("rate", "information rate");
    rt->add_option("--p", p)->required();
    rt->add_option("--m", m)->required();
    rt->add_option("--t", t)->required();
    rt->add_option("--l", l)->required();
    rt->callback([&] { std::cout << "rate=" << fmt(qcnr::info_rate({p, m, t, l}), 4) << "\n"; });

    auto* mq = an->add_subcommand("mq", "smallest quantum-secure m");
    mq->add_option("--p", p)->required();
    mq->callback([&] { std::cout << "m_q=" << qcnr::min_m_quantum(p) << "\n"; });

    auto* mc = an->add_subcommand("mc", "smallest classically secure m");
    mc->add_option("--p", p)->required();
    mc->add_option("--t", t)->required();
    mc->add_option("--bits", bits, "target security level")->required();
    mc->callback([&] {
        std::cout << "m_c=" << qcnr::min_m_classical(p, t, static_cast<double>(bits)) << "\n";
    });

    auto* qs = an->add_subcommand("qsec", "hidden-subgroup bookkeeping");
    qs->add_option("--p", p)->required();
    qs->add_option("--m", m)->required();
    qs->add_option("--aut", aut_size, "|Aut(H)|; default worst case p(p-1)");
    qs->add_option("--delta", delta, "exponent constant delta > 0");
    qs->add_option("--a", a_const, "premise constant, 0 < a < 1/4");
    qs->callback([&] {
        const auto rep =
            qcnr::qsec_report(p, m, aut_size ? aut_size : static_cast<std::uint64_t>(p) * (p - 1),
                              delta, a_const);
        std::cout << "m_q=" << rep.m_q << "\n"
                  << "h0_size=" << rep.h0_size << "\n"
                  << "k_size=" << rep.k_size << "\n"
                  << "dk_bound_log2=" << fmt(rep.dk_bound_log2) << "\n"
                  << "premise_ok=" << (rep.premise_ok ? "true" : "false") << "\n"
                  << "delta=" << fmt(rep.delta, 3) << "\n"
                  << "a=" << fmt(rep.a, 4) << "\n";
    });

    auto* t1 = an->add_subcommand("table1", "regenerate the reproducible parameter table");
    t1->callback([&] { cmd_analyze_table1(); });

    // verify
    auto* vf = app.add_subcommand("verify", "check conditions I-V");
    vf->add_option("--key", keyfile, "private key file");
    vf->add_option("--p", p);
    vf->add_option("--m", m);
    vf->add_option("--l", l);
    vf->add_option("--t", t);
    add_seed(vf);
    vf->callback([&] {
        if (!keyfile.empty()) {
            // no decoder needed to check conditions, so skip the table build
            qcnr::keygen_options no_table;
            no_table.mode = qcnr::decoder_mode::isd;
            const qcnr::private_key sk = qcnr::parse_private(read_file(keyfile), no_table);
            print_condition_report(qcnr::verify_conditions(sk.h));
        } else if (p && m) {
            print_condition_report(qcnr::verify_conditions(oracle_instance(p, m, l, t, seed)));
        } else {
            throw qcnr::parameter_error("verify: need --key or --p/--m");
        }
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "brute-force group-theory oracles (toy sizes)");
    orc->require_subcommand(1);

    auto* oa = orc->add_subcommand("aut", "Aut(H) via the T_H enumeration");
    oa->add_option("--p", p)->required();
    oa->add_option("--m", m)->required();
    oa->add_option("--l", l);
    oa->add_option("--t", t);
    add_seed(oa);
    oa->add_option("--cap", cap, "enumeration cap (p! must stay within)");
    oa->add_flag("--full", full_sweep, "also run the full S_n sweep (p=3, m=2 only)");
    oa->callback([&] {
        const auto h = oracle_instance(p, m, l, t, seed);
        print_aut_report(qcnr::brute_aut(h, cap));
        if (full_sweep) {
            if (p != 3 || m != 2)
                throw qcnr::budget_error("oracle aut --full: S_n sweep allowed only at p=3, m=2");
            std::cout << "full_sweep=" << (qcnr::full_aut_crosscheck(h) ? "pass" : "fail") << "\n";
        }
    });

    auto* ot = orc->add_subcommand("tset", "list T_H");
    ot->add_option("--p", p)->required();
    ot->add_option("--m", m)->required();
    ot->add_option("--l", l);
    ot->add_option("--t", t);
    add_seed(ot);
    ot->add_option("--cap", cap);
    ot->callback([&] {
        const auto rep = qcnr::brute_aut(oracle_instance(p, m, l, t, seed), cap);
        print_aut_report(rep);
        for (const auto& el : rep.t_set) {
            std::cout << "elem=";
            for (std::size_t i = 0; i < el.size(); ++i)
                std::cout << (i ? " " : "") << el.images[i];
            std::cout << "\n";
        }
    });

    auto* o2 = orc->add_subcommand("2trans", "2-transitivity of T_H");
    o2->add_option("--p", p)->required();
    o2->add_option("--m", m)->required();
    o2->add_option("--l", l);
    o2->add_option("--t", t);
    add_seed(o2);
    o2->add_option("--cap", cap);
    o2->callback([&] {
        const auto rep = qcnr::brute_aut(oracle_instance(p, m, l, t, seed), cap);
        std::cout << "two_transitive=" << (rep.two_transitive ? "true" : "false") << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const qcnr::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const qcnr::budget_error& e) {
        std::cerr << "cap/budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const qcnr::parse_error& e) {
        std::cerr << "file format error: " << e.what() << "\n";
        return 5;
    } catch (const qcnr::table_collision& e) {
        std::cerr << "unusable key: " << e.what() << "\n";
        return 5;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return decrypt_status;
}
