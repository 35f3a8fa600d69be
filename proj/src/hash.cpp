#include "idsdvbs/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace idsdvbs {

struct Sha256::Impl {
    EVP_MD_CTX* ctx = nullptr;
};

Sha256::Sha256() : impl_(std::make_unique<Impl>())
{
    impl_->ctx = EVP_MD_CTX_new();
    if (impl_->ctx == nullptr || EVP_DigestInit_ex(impl_->ctx, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("EVP sha256 init failed");
}

Sha256::~Sha256()
{
    EVP_MD_CTX_free(impl_->ctx);
}

Sha256& Sha256::update(ByteView data)
{
    if (EVP_DigestUpdate(impl_->ctx, data.data(), data.size()) != 1)
        throw std::runtime_error("EVP sha256 update failed");
    return *this;
}

Digest Sha256::finish()
{
    Digest out{};
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(impl_->ctx, out.data(), &len) != 1 || len != out.size())
        throw std::runtime_error("EVP sha256 final failed");
    return out;
}

Digest sha256(ByteView data)
{
    return Sha256().update(data).finish();
}

}  // namespace idsdvbs
