#include "dualsig/keyfile.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace dualsig {

namespace {

constexpr const char* kVersion = "1";

std::string render(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out;
    for (const auto& [k, v] : fields) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

std::map<std::string, std::string> parse_fields(const std::string& text,
                                                const std::vector<std::string>& expected) {
    std::map<std::string, std::string> fields;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            if (!in.eof()) throw parse_error("blank line");
            continue;
        }
        auto sep = line.find(" = ");
        if (sep == std::string::npos || sep == 0 || sep + 3 >= line.size())
            throw parse_error("malformed line: " + line);
        std::string key = line.substr(0, sep);
        std::string value = line.substr(sep + 3);
        if (fields.count(key)) throw parse_error("duplicate field: " + key);
        bool known = false;
        for (const auto& e : expected) known = known || e == key;
        if (!known) throw parse_error("unknown field: " + key);
        fields.emplace(std::move(key), std::move(value));
    }
    for (const auto& e : expected) {
        if (!fields.count(e)) throw parse_error("missing field: " + e);
    }
    if (fields.at("ver") != kVersion) throw parse_error("unsupported version");
    return fields;
}

Nat field_nat(const std::map<std::string, std::string>& fields, const std::string& key) {
    try {
        return nat_from_hex(fields.at(key));
    } catch (const std::invalid_argument& e) {
        throw parse_error("field " + key + ": " + e.what());
    }
}

}  // namespace

std::string write_params_file(const SchemeParams& params) {
    return render({{"ver", kVersion},
                   {"p", to_hex(params.curve.p)},
                   {"A", to_hex(params.curve.a)},
                   {"n", to_hex(params.n)},
                   {"Px", to_hex(params.P.x)},
                   {"Py", to_hex(params.P.y)}});
}

std::string write_primes_file(const Nat& p1, const Nat& p2) {
    return render({{"ver", kVersion}, {"p1", to_hex(p1)}, {"p2", to_hex(p2)}});
}

std::string write_public_file(const PublicKey& pub) {
    return render({{"ver", kVersion},
                   {"p", to_hex(pub.params.curve.p)},
                   {"A", to_hex(pub.params.curve.a)},
                   {"n", to_hex(pub.params.n)},
                   {"g", to_hex(pub.g)},
                   {"Px", to_hex(pub.params.P.x)},
                   {"Py", to_hex(pub.params.P.y)},
                   {"Qx", to_hex(pub.Q.x)},
                   {"Qy", to_hex(pub.Q.y)},
                   {"Rx", to_hex(pub.R.x)},
                   {"Ry", to_hex(pub.R.y)},
                   {"r", to_hex(pub.r)}});
}

std::string write_private_file(const PrivateKey& priv) {
    return render({{"ver", kVersion},
                   {"p1", to_hex(priv.p1)},
                   {"p2", to_hex(priv.p2)},
                   {"a", to_hex(priv.a)},
                   {"b", to_hex(priv.b)}});
}

std::string write_signature_file(const Signature& sig) {
    return render({{"ver", kVersion}, {"Sx", to_hex(sig.Sx)}, {"s", to_hex(sig.s)}});
}

SchemeParams read_params_file(const std::string& text) {
    auto f = parse_fields(text, {"ver", "p", "A", "n", "Px", "Py"});
    SchemeParams params{CurveParams{field_nat(f, "p"), field_nat(f, "A")}, field_nat(f, "n"),
                        Point::affine(field_nat(f, "Px"), field_nat(f, "Py"))};
    validate_params(params);
    return params;
}

std::pair<Nat, Nat> read_primes_file(const std::string& text) {
    auto f = parse_fields(text, {"ver", "p1", "p2"});
    Nat p1 = field_nat(f, "p1");
    Nat p2 = field_nat(f, "p2");
    if (!is_prime(p1) || !is_prime(p2) || p1 == p2)
        throw validation_error("primes file: p1, p2 must be distinct primes");
    return {p1, p2};
}

PublicKey read_public_file(const std::string& text) {
    auto f = parse_fields(text, {"ver", "p", "A", "n", "g", "Px", "Py", "Qx", "Qy", "Rx", "Ry", "r"});
    SchemeParams params{CurveParams{field_nat(f, "p"), field_nat(f, "A")}, field_nat(f, "n"),
                        Point::affine(field_nat(f, "Px"), field_nat(f, "Py"))};
    PublicKey pub{params, field_nat(f, "g"),
                  Point::affine(field_nat(f, "Qx"), field_nat(f, "Qy")),
                  Point::affine(field_nat(f, "Rx"), field_nat(f, "Ry")), field_nat(f, "r")};
    validate_public_key(pub);
    return pub;
}

PrivateKey read_private_file(const std::string& text) {
    auto f = parse_fields(text, {"ver", "p1", "p2", "a", "b"});
    PrivateKey priv{field_nat(f, "p1"), field_nat(f, "p2"), field_nat(f, "a"), field_nat(f, "b"),
                    0};
    priv.phi = (priv.p1 - 1) * (priv.p2 - 1);
    validate_private_key(priv);
    return priv;
}

Signature read_signature_file(const std::string& text) {
    auto f = parse_fields(text, {"ver", "Sx", "s"});
    return Signature{field_nat(f, "Sx"), field_nat(f, "s")};
}

}  // namespace dualsig
