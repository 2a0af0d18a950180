#include "udm/io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "udm/error.hpp"

namespace udm {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

std::uint64_t parse_uint(const std::string& tok, std::size_t line_no, const char* what) {
    std::uint64_t v = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    return v;
}

std::string pascal_line(const Family& family) {
    const Field& F = *family.field();
    const auto betas = BetaSequence::pascal(F, *family.pascal_alpha(), family.L());
    std::ostringstream out;
    out << "# pascal alpha=" << family.pascal_alpha()->value << " betas=";
    for (std::size_t l = 0; l < betas.size(); ++l) out << (l ? "," : "") << to_string(betas[l]);
    return out.str();
}

}  // namespace

std::string write_family(const Family& family) {
    const Field& F = *family.field();
    std::ostringstream out;
    out << "UDM " << family.L() << ' ' << family.N() << ' ' << family.K() << ' ' << F.order();
    for (auto c : F.modulus()) out << ' ' << c;
    out << '\n' << "# field " << F.name() << '\n';
    if (family.pascal_alpha()) out << pascal_line(family) << '\n';
    for (const auto& m : family.matrices()) out << '\n' << to_string(m);
    return out.str();
}

Family read_family(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t L = 0, N = 0, K = 0;
    FieldPtr field;
    std::optional<Element> alpha;
    std::string betas_text;
    std::size_t pascal_line_no = 0;

    std::vector<std::vector<std::vector<std::uint32_t>>> blocks;
    bool in_block = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) {
            in_block = false;
            continue;
        }
        const auto first = line.find_first_not_of(" \t");
        if (line[first] == '#') {
            const auto toks = split_ws(line.substr(first + 1));
            if (!toks.empty() && toks[0] == "pascal") {
                pascal_line_no = line_no;
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (toks[i].rfind("alpha=", 0) == 0) {
                        alpha = Element{static_cast<std::uint32_t>(parse_uint(toks[i].substr(6), line_no, "alpha"))};
                    } else if (toks[i].rfind("betas=", 0) == 0) {
                        betas_text = toks[i].substr(6);
                    }
                }
                if (!alpha) throw ParseError(line_no, "pascal comment without alpha=");
            }
            continue;
        }
        const auto toks = split_ws(line);
        if (!have_header) {
            if (toks.size() < 5 || toks[0] != "UDM") {
                throw ParseError(line_no, "expected header 'UDM L N K q modulus...'");
            }
            L = parse_uint(toks[1], line_no, "L");
            N = parse_uint(toks[2], line_no, "N");
            K = parse_uint(toks[3], line_no, "K");
            const auto q = parse_uint(toks[4], line_no, "q");
            if (L < 1 || N < 1 || K < 1) throw ParseError(line_no, "L, N and K must be positive");
            std::vector<std::uint32_t> modulus;
            for (std::size_t i = 5; i < toks.size(); ++i) {
                modulus.push_back(static_cast<std::uint32_t>(parse_uint(toks[i], line_no, "modulus coefficient")));
            }
            try {
                field = Field::create(q);
                if (!modulus.empty() && modulus != field->modulus()) {
                    field = Field::create(field->characteristic(), field->degree(), modulus);
                }
            } catch (const DomainError& e) {
                throw ParseError(line_no, e.what());
            }
            have_header = true;
            continue;
        }
        if (toks.size() != K) {
            throw ParseError(line_no, "expected " + std::to_string(K) + " entries, got " + std::to_string(toks.size()));
        }
        std::vector<std::uint32_t> row;
        for (const auto& t : toks) {
            const auto v = parse_uint(t, line_no, "element");
            if (v >= field->order()) {
                throw ParseError(line_no, "value " + t + " is not an element of " + field->name());
            }
            row.push_back(static_cast<std::uint32_t>(v));
        }
        if (!in_block) {
            if (!blocks.empty() && blocks.back().size() != N) {
                throw ParseError(line_no, "previous block has " + std::to_string(blocks.back().size()) +
                                              " rows, expected N = " + std::to_string(N));
            }
            blocks.emplace_back();
            in_block = true;
        }
        if (blocks.back().size() == N) {
            throw ParseError(line_no, "block has more than N = " + std::to_string(N) + " rows");
        }
        blocks.back().push_back(std::move(row));
    }
    if (!have_header) throw ParseError(line_no, "missing 'UDM' header");
    if (blocks.size() != L || (!blocks.empty() && blocks.back().size() != N)) {
        throw ParseError(line_no, "expected " + std::to_string(L) + " blocks of " + std::to_string(N) +
                                      " rows, found " + std::to_string(blocks.size()) + " blocks");
    }
    std::vector<Matrix> ms;
    for (const auto& b : blocks) ms.push_back(Matrix::from_rows(field, b, K));
    try {
        Family family(field, N, K, std::move(ms), Provenance::loaded, alpha);
        if (alpha) {
            if (!field->is_primitive(*alpha)) throw ParseError(pascal_line_no, "alpha is not primitive");
            if (!betas_text.empty() && pascal_line(family).find("betas=" + betas_text) == std::string::npos) {
                throw ParseError(pascal_line_no, "betas do not match alpha");
            }
            if (!(family == construct_pascal(L, N, K, field, alpha))) {
                throw ParseError(pascal_line_no, "matrices do not match the Pascal construction for this alpha");
            }
        }
        return family;
    } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
    }
}

Family parse_family(const std::string& text) {
    std::istringstream in(text);
    return read_family(in);
}

std::string write_received(const Field& field, std::size_t K, const ChannelOutput& out) {
    std::ostringstream s;
    s << "RX " << out.L() << ' ' << out.N() << ' ' << K << ' ' << field.order() << '\n';
    for (std::size_t l = 0; l < out.L(); ++l) {
        const auto& r = out.received(l);
        for (std::size_t n = 0; n < out.N(); ++n) {
            if (n) s << ' ';
            if (n < r.size()) s << r[n].value;
            else s << '?';
        }
        s << '\n';
    }
    return s.str();
}

ReceivedWord read_received(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t L = 0, N = 0, K = 0;
    FieldPtr field;
    std::vector<std::vector<Element>> prefixes;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        const auto first = line.find_first_not_of(" \t");
        if (line[first] == '#') continue;
        const auto toks = split_ws(line);
        if (!field) {
            if (toks.size() != 5 || toks[0] != "RX") throw ParseError(line_no, "expected header 'RX L N K q'");
            L = parse_uint(toks[1], line_no, "L");
            N = parse_uint(toks[2], line_no, "N");
            K = parse_uint(toks[3], line_no, "K");
            try {
                field = Field::create(parse_uint(toks[4], line_no, "q"));
            } catch (const DomainError& e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }
        if (prefixes.size() == L) throw ParseError(line_no, "more than L channel lines");
        if (toks.size() != N) {
            throw ParseError(line_no, "expected " + std::to_string(N) + " symbols, got " + std::to_string(toks.size()));
        }
        std::vector<Element> r;
        bool erased = false;
        for (const auto& t : toks) {
            if (t == "?") {
                erased = true;
                continue;
            }
            if (erased) throw ParseError(line_no, "symbol after an erasure; only a prefix may be received");
            const auto v = parse_uint(t, line_no, "element or '?'");
            if (v >= field->order()) throw ParseError(line_no, "value " + t + " is not an element of " + field->name());
            r.push_back(Element{static_cast<std::uint32_t>(v)});
        }
        prefixes.push_back(std::move(r));
    }
    if (!field) throw ParseError(line_no, "missing 'RX' header");
    if (prefixes.size() != L) {
        throw ParseError(line_no, "expected " + std::to_string(L) + " channel lines, found " +
                                      std::to_string(prefixes.size()));
    }
    return {field, K, ChannelOutput(N, std::move(prefixes))};
}

ReceivedWord parse_received(const std::string& text) {
    std::istringstream in(text);
    return read_received(in);
}

Matrix parse_matrix(const FieldPtr& field, const std::string& text) {
    std::vector<std::vector<std::uint32_t>> rows;
    std::string chunk;
    std::string normalized = text;
    for (auto& c : normalized) {
        if (c == '\n') c = ';';
        if (c == ',') c = ' ';
    }
    std::istringstream in(normalized);
    while (std::getline(in, chunk, ';')) {
        if (is_blank(chunk)) continue;
        std::vector<std::uint32_t> row;
        for (const auto& t : split_ws(chunk)) row.push_back(static_cast<std::uint32_t>(parse_uint(t, 1, "element")));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DomainError("empty matrix");
    return Matrix::from_rows(field, rows, rows.front().size());
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::string normalized = text;
    for (auto& c : normalized) {
        if (c == ',' || c == '(' || c == ')') c = ' ';
    }
    std::vector<std::uint64_t> out;
    for (const auto& t : split_ws(normalized)) out.push_back(parse_uint(t, 1, "integer"));
    return out;
}

}  // namespace udm
