#include "cipherselect/kat.hpp"

namespace cipherselect {

const std::vector<KnownAnswer>& standard_vectors() {
    static const std::vector<KnownAnswer> vectors = {
        {"AES-128 FIPS-197 C.1", CipherId::AES, "000102030405060708090a0b0c0d0e0f",
         "00112233445566778899aabbccddeeff", "69c4e0d86a7b0430d8cdb78070b4c55a"},
        {"AES-192 FIPS-197 C.2", CipherId::AES, "000102030405060708090a0b0c0d0e0f1011121314151617",
         "00112233445566778899aabbccddeeff", "dda97ca4864cdfe06eaf70a0ec0d7191"},
        {"AES-256 FIPS-197 C.3", CipherId::AES, "000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f",
         "00112233445566778899aabbccddeeff", "8ea2b7ca516745bfeafc49904b496089"},
        {"DES worked example", CipherId::DES, "133457799bbcdff1", "0123456789abcdef", "85e813540f0ab405"},
        {"DES 0e329232ea6d0d73", CipherId::DES, "0e329232ea6d0d73", "8787878787878787", "0000000000000000"},
        {"TDES-112 EDE", CipherId::TDES, "0123456789abcdef23456789abcdef01", "6bc1bee22e409f96", "06ede3d82884090a"},
        {"TDES-168 EDE", CipherId::TDES, "0123456789abcdef23456789abcdef01456789abcdef0123", "6bc1bee22e409f96",
         "714772f339841d34"},
        {"RC2 RFC 2268 #1 (eff 63)", CipherId::RC2, "0000000000000000", "0000000000000000", "ebb773f993278eff", 63},
        {"RC2 RFC 2268 #2", CipherId::RC2, "ffffffffffffffff", "ffffffffffffffff", "278b27e42e2f0d49", 64},
        {"RC2 RFC 2268 #3", CipherId::RC2, "3000000000000000", "1000000000000001", "30649edf9be7d2c2", 64},
        {"RC2 RFC 2268 #5", CipherId::RC2, "88bca90e90875a", "0000000000000000", "6ccf4308974c267f", 64},
        {"RC2 RFC 2268 #6", CipherId::RC2, "88bca90e90875a7f0f79c384627bafb2", "0000000000000000",
         "1a807d272bbe5db1", 64},
        {"RC2 RFC 2268 #7", CipherId::RC2, "88bca90e90875a7f0f79c384627bafb2", "0000000000000000",
         "2269552ab0f85ca6", 128},
        {"RC2 RFC 2268 #8 (eff 129)", CipherId::RC2,
         "88bca90e90875a7f0f79c384627bafb216f80a6f85920584c42fceb0be255daf1e", "0000000000000000",
         "5b78d3a43dfff1f1", 129},
        {"Blowfish zero key", CipherId::BLOWFISH, "0000000000000000", "0000000000000000", "4ef997456198dd78"},
        {"Blowfish all-ones", CipherId::BLOWFISH, "ffffffffffffffff", "ffffffffffffffff", "51866fd5b85ecb8a"},
        {"Blowfish 3000000000000000", CipherId::BLOWFISH, "3000000000000000", "1000000000000001",
         "7d856f9a613063f2"},
        {"Blowfish 0123456789abcdef", CipherId::BLOWFISH, "0123456789abcdef", "1111111111111111",
         "61f9c3802281b096"},
        {"Blowfish fedcba9876543210", CipherId::BLOWFISH, "fedcba9876543210", "0123456789abcdef",
         "0aceab0fc6a0a28d"},
        {"Skipjack specification", CipherId::SKIPJACK, "00998877665544332211", "33221100ddccbbaa",
         "2587cae27a12d300"},
        {"RC4 Key/Plaintext", CipherId::RC4, "4b6579", "506c61696e74657874", "bbf316e8d940af0ad3"},
        {"RC4 Wiki/pedia", CipherId::RC4, "57696b69", "7065646961", "1021bf0420"},
        {"RC4 Secret/Attack at dawn", CipherId::RC4, "536563726574", "41747461636b206174206461776e",
         "45a01f645fc35b383552544b9bf5"},
    };
    return vectors;
}

namespace {

template <class Cipher>
std::pair<Bytes, Bytes> encrypt_and_back(const Cipher& c, const Bytes& in) {
    Bytes ct(in.size());
    Bytes pt(in.size());
    c.encrypt_block(in.data(), ct.data());
    c.decrypt_block(ct.data(), pt.data());
    return {ct, pt};
}

}  // namespace

KatResult run_known_answer(const KnownAnswer& vec) {
    const Bytes key = from_hex(vec.key_hex);
    const Bytes in = from_hex(vec.input_hex);
    std::pair<Bytes, Bytes> r;
    switch (vec.cipher) {
        case CipherId::AES: r = encrypt_and_back(ciphers::Aes(key), in); break;
        case CipherId::DES: r = encrypt_and_back(ciphers::Des(key), in); break;
        case CipherId::TDES: r = encrypt_and_back(ciphers::TripleDes(key), in); break;
        case CipherId::RC2:
            r = encrypt_and_back(vec.rc2_effective_bits > 0 ? ciphers::Rc2(key, vec.rc2_effective_bits)
                                                            : ciphers::Rc2(key),
                                 in);
            break;
        case CipherId::BLOWFISH: r = encrypt_and_back(ciphers::Blowfish(key), in); break;
        case CipherId::SKIPJACK: r = encrypt_and_back(ciphers::Skipjack(key), in); break;
        case CipherId::RC4: {
            ciphers::Rc4 enc(key);
            ciphers::Rc4 dec(key);
            r.first.resize(in.size());
            r.second.resize(in.size());
            enc.apply(in, r.first);
            dec.apply(r.first, r.second);
            break;
        }
    }
    KatResult result;
    result.name = vec.name;
    result.actual_hex = to_hex(r.first);
    result.expected_hex = vec.expected_hex;
    result.passed = result.actual_hex == vec.expected_hex && r.second == in;
    return result;
}

std::vector<KatResult> run_known_answer_tests() {
    std::vector<KatResult> out;
    for (const auto& v : standard_vectors()) out.push_back(run_known_answer(v));
    return out;
}

}  // namespace cipherselect
