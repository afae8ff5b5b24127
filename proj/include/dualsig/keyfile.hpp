#pragma once

#include <string>
#include <utility>

#include "dualsig/scheme.hpp"

namespace dualsig {

// Line-oriented `name = hexvalue` files (UTF-8, one field per line).
// Field sets are fixed per kind; unknown, missing, or duplicate fields are
// parse errors, and every load re-validates the type invariants.
//
//   .params : ver p A n Px Py
//   .primes : ver p1 p2
//   .pub    : ver p A n g Px Py Qx Qy Rx Ry r
//   .priv   : ver p1 p2 a b
//   .sig    : ver Sx s

class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

std::string write_params_file(const SchemeParams& params);
std::string write_primes_file(const Nat& p1, const Nat& p2);
std::string write_public_file(const PublicKey& pub);
std::string write_private_file(const PrivateKey& priv);
std::string write_signature_file(const Signature& sig);

SchemeParams read_params_file(const std::string& text);
std::pair<Nat, Nat> read_primes_file(const std::string& text);
PublicKey read_public_file(const std::string& text);
PrivateKey read_private_file(const std::string& text);
Signature read_signature_file(const std::string& text);

}  // namespace dualsig
