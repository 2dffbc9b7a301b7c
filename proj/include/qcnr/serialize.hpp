#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qcnr/niederreiter.hpp"

namespace qcnr {

// Text key format, magic QCNR1. Field elements are fixed-width lowercase
// hex, ceil(l/4) digits each, matrices row-major one row per line,
// permutations space-separated image lists. Emission is canonical:
// parse(emit(x)) == x and emit(parse(s)) == s byte for byte.

namespace detail {

inline unsigned hex_width(unsigned bits) { return (bits + 3) / 4; }

inline void append_hex(std::string& out, std::uint32_t v, unsigned width) {
    static const char digits[] = "0123456789abcdef";
    for (unsigned i = width; i-- > 0;)
        out.push_back(digits[(v >> (4 * i)) & 0xf]);
}

inline std::uint32_t parse_hex(std::string_view s) {
    std::uint32_t v = 0;
    if (s.empty())
        throw parse_error("empty hex field");
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9')
            v |= static_cast<std::uint32_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v |= static_cast<std::uint32_t>(c - 'a' + 10);
        else
            throw parse_error("bad hex digit in key file");
    }
    return v;
}

inline void append_fe_row(std::string& out, unsigned l, std::span<const fe> row) {
    const unsigned w = hex_width(l);
    for (fe v : row)
        append_hex(out, v, w);
    out.push_back('\n');
}

inline std::vector<fe> parse_fe_row(unsigned l, std::string_view line, std::size_t count) {
    const unsigned w = hex_width(l);
    if (line.size() != w * count)
        throw parse_error("element row has wrong length");
    std::vector<fe> row(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint32_t v = parse_hex(line.substr(i * w, w));
        if (v >= (1u << l))
            throw parse_error("element out of range for the field");
        row[i] = static_cast<fe>(v);
    }
    return row;
}

// line-by-line cursor over the file body
class line_reader {
  public:
    explicit line_reader(std::string_view text) : text_(text) {}

    std::string_view next() {
        if (pos_ >= text_.size())
            throw parse_error("unexpected end of key file");
        const auto nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos)
            throw parse_error("missing final newline");
        std::string_view line = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        return line;
    }

    std::string_view expect_field(std::string_view name) {
        std::string_view line = next();
        if (line.size() < name.size() + 2 || line.substr(0, name.size()) != name ||
            line[name.size()] != ' ')
            throw parse_error(std::string("expected field '") + std::string(name) + "'");
        return line.substr(name.size() + 1);
    }

    void expect_line(std::string_view want) {
        if (next() != want)
            throw parse_error(std::string("expected line '") + std::string(want) + "'");
    }

    bool at_end() const { return pos_ >= text_.size(); }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::uint64_t parse_dec(std::string_view s) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw parse_error("bad decimal field");
    return v;
}

inline void emit_header(std::string& out, std::string_view role, const qc_params& pr,
                        const gf& f) {
    out += "QCNR1 ";
    out += role;
    out.push_back('\n');
    out += "l " + std::to_string(pr.l) + "\n";
    out += "modulus ";
    append_hex(out, f.modulus(), hex_width(pr.l + 1));
    out.push_back('\n');
    out += "p " + std::to_string(pr.p) + "\n";
    out += "m " + std::to_string(pr.m) + "\n";
    out += "t " + std::to_string(pr.t) + "\n";
}

struct header {
    qc_params params;
    std::uint32_t modulus = 0;
    std::string role;
};

inline header parse_header(line_reader& in) {
    header h;
    const std::string_view magic = in.next();
    if (magic.substr(0, 6) != "QCNR1 ")
        throw parse_error("bad magic; not a QCNR1 key file");
    h.role = std::string(magic.substr(6));
    h.params.l = static_cast<unsigned>(parse_dec(in.expect_field("l")));
    if (h.params.l < 1 || h.params.l > 16)
        throw parse_error("l out of range");
    h.modulus = parse_hex(in.expect_field("modulus"));
    h.params.p = parse_dec(in.expect_field("p"));
    h.params.m = parse_dec(in.expect_field("m"));
    h.params.t = parse_dec(in.expect_field("t"));
    try {
        h.params.validate();
    } catch (const parameter_error& e) {
        throw parse_error(e.what());
    }
    return h;
}

inline gf field_of(const header& h) {
    try {
        return gf(h.params.l, h.modulus);
    } catch (const parameter_error& e) {
        throw parse_error(e.what());
    }
}

} // namespace detail

inline std::string emit_public(const public_key& pk) {
    std::string out;
    detail::emit_header(out, "PUBLIC", pk.params, pk.field);
    out += "hpub\n";
    for (std::size_t r = 0; r < pk.hpub.rows; ++r)
        detail::append_fe_row(out, pk.params.l,
                              std::span<const fe>(pk.hpub.a).subspan(r * pk.hpub.cols,
                                                                     pk.hpub.cols));
    return out;
}

inline std::string emit_private(const private_key& sk) {
    std::string out;
    detail::emit_header(out, "PRIVATE", sk.params, sk.field);
    out += "marked ";
    detail::append_hex(out, sk.h.mark_a, detail::hex_width(sk.params.l));
    out.push_back(' ');
    detail::append_hex(out, sk.h.mark_b, detail::hex_width(sk.params.l));
    out.push_back('\n');
    out += "a0\n";
    for (std::size_t r = 0; r < sk.a0.rows; ++r)
        detail::append_fe_row(out, sk.params.l,
                              std::span<const fe>(sk.a0.a).subspan(r * sk.a0.cols, sk.a0.cols));
    out += "b0\n";
    for (std::size_t i = 0; i < sk.b0.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += std::to_string(sk.b0.images[i]);
    }
    out.push_back('\n');
    out += "blocks\n";
    for (const auto& blk : sk.h.blocks)
        detail::append_fe_row(out, sk.params.l, blk.first_row);
    return out;
}

inline public_key parse_public(std::string_view text) {
    detail::line_reader in(text);
    const auto hdr = detail::parse_header(in);
    if (hdr.role != "PUBLIC")
        throw parse_error("not a PUBLIC key file");
    gf f = detail::field_of(hdr);
    in.expect_line("hpub");
    mat hpub(hdr.params.p, hdr.params.n());
    for (std::size_t r = 0; r < hpub.rows; ++r) {
        const auto row = detail::parse_fe_row(hdr.params.l, in.next(), hpub.cols);
        std::copy(row.begin(), row.end(), hpub.a.begin() + static_cast<long>(r * hpub.cols));
    }
    if (!in.at_end())
        throw parse_error("trailing data in key file");
    return public_key{hdr.params, std::move(f), std::move(hpub)};
}

inline private_key parse_private(std::string_view text, const keygen_options& opt = {}) {
    detail::line_reader in(text);
    const auto hdr = detail::parse_header(in);
    if (hdr.role != "PRIVATE")
        throw parse_error("not a PRIVATE key file");
    gf f = detail::field_of(hdr);

    const std::string_view marked = in.expect_field("marked");
    const unsigned w = detail::hex_width(hdr.params.l);
    if (marked.size() != 2 * w + 1 || marked[w] != ' ')
        throw parse_error("malformed marked pair");
    const fe mark_a = static_cast<fe>(detail::parse_hex(marked.substr(0, w)));
    const fe mark_b = static_cast<fe>(detail::parse_hex(marked.substr(w + 1)));
    if (!f.valid(mark_a) || !f.valid(mark_b))
        throw parse_error("marked pair out of range");

    in.expect_line("a0");
    mat a0(hdr.params.p, hdr.params.p);
    for (std::size_t r = 0; r < a0.rows; ++r) {
        const auto row = detail::parse_fe_row(hdr.params.l, in.next(), a0.cols);
        std::copy(row.begin(), row.end(), a0.a.begin() + static_cast<long>(r * a0.cols));
    }

    in.expect_line("b0");
    perm b0;
    {
        std::istringstream ss{std::string(in.next())};
        std::uint64_t v;
        while (ss >> v)
            b0.images.push_back(static_cast<std::uint32_t>(v));
    }
    if (b0.size() != hdr.params.n() || !b0.is_bijection())
        throw parse_error("b0 is not a permutation of n");

    in.expect_line("blocks");
    parity_check h{hdr.params, f, {}, mark_a, mark_b};
    for (std::size_t i = 0; i + 1 < hdr.params.m; ++i)
        h.blocks.push_back(circulant{hdr.params.p,
                                     detail::parse_fe_row(hdr.params.l, in.next(), hdr.params.p)});
    if (!in.at_end())
        throw parse_error("trailing data in key file");

    auto a0inv = mat_inverse(f, a0);
    if (!a0inv)
        throw parse_error("a0 in key file is singular");
    auto table = make_decoder_table(h, opt);
    return private_key{hdr.params, std::move(f),  std::move(a0), std::move(*a0inv),
                       std::move(h), std::move(b0), std::move(table)};
}

// Message files: one line of fixed-width hex elements.
inline std::string emit_fe_line(unsigned l, std::span<const fe> v) {
    std::string out;
    detail::append_fe_row(out, l, v);
    return out;
}

inline std::vector<fe> parse_fe_line(unsigned l, std::string_view text, std::size_t count) {
    if (text.empty() || text.back() != '\n')
        throw parse_error("message file must end with a newline");
    return detail::parse_fe_row(l, text.substr(0, text.size() - 1), count);
}

} // namespace qcnr
