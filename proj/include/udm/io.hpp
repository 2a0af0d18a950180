#ifndef UDM_IO_HPP
#define UDM_IO_HPP

#include <iosfwd>
#include <string>

#include "udm/codec.hpp"
#include "udm/family.hpp"

namespace udm {

// Family file:
//
//   UDM <L> <N> <K> <q> <modulus coefficients, constant term first>
//   # field GF(q)
//   # pascal alpha=<a> betas=<b0>,inf,...      (Pascal families only)
//
//   <N rows of K element values>               (block for A_0)
//
//   <N rows of K element values>               (block for A_1)
//   ...
//
// Elements are written as their radix-p integer value.

std::string write_family(const Family& family);
/// Throws ParseError with the offending line number.
Family read_family(std::istream& in);
Family parse_family(const std::string& text);

// Received-word file:
//
//   RX <L> <N> <K> <q>
//   <v_0 element values> ? ? ...               (N tokens per line)
//   ...

struct ReceivedWord {
    FieldPtr field;
    std::size_t K;
    ChannelOutput output;
};

std::string write_received(const Field& field, std::size_t K, const ChannelOutput& out);
ReceivedWord read_received(std::istream& in);
ReceivedWord parse_received(const std::string& text);

/// "a b c; d e f" -> matrix; rows separated by ';' or newlines.
Matrix parse_matrix(const FieldPtr& field, const std::string& text);
/// "1,2,0" or "1 2 0" -> integers.
std::vector<std::uint64_t> parse_list(const std::string& text);

}  // namespace udm

#endif  // UDM_IO_HPP
