#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#ifdef DOWRA_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "verify.hpp"

namespace dowra {

class network_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class http_status_error : public std::runtime_error {
  public:
    http_status_error(const std::string& what, int status)
        : std::runtime_error(what), status_(status) {}
    int status() const { return status_; }

  private:
    int status_;
};

struct fetch_options {
    bool fetch = false; // false: read the fixtures cache only
    std::string fixtures_dir = "fixtures";
};

namespace detail {

inline std::mutex& fetch_mutex_for(const std::string& oeis_id) {
    static std::mutex registry_mutex;
    static std::map<std::string, std::mutex> registry;
    std::lock_guard<std::mutex> lock(registry_mutex);
    return registry[oeis_id];
}

inline void write_cache_atomically(const std::string& path, const std::string& bytes) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write cache file " + tmp);
        }
        out << bytes;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot move cache file into place at " + path);
    }
}

} // namespace detail

/// Retrieves the b-file for a sequence. Offline mode reads the fixtures cache
/// only; online mode fetches https://oeis.org/<ID>/b<digits>.txt, caching the
/// body in the fixtures directory (write-temp-then-rename). Fetches for the
/// same sequence are serialized.
inline std::string fetch_bfile(const std::string& oeis_id, const fetch_options& opts) {
    if (!opts.fetch) {
        return read_fixture(oeis_id, opts.fixtures_dir);
    }
    std::lock_guard<std::mutex> single_flight(detail::fetch_mutex_for(oeis_id));
    const std::string path = "/" + oeis_id + "/" + bfile_name(oeis_id);
#ifdef DOWRA_HAVE_OPENSSL
    httplib::SSLClient client("oeis.org", 443);
    client.enable_server_certificate_verification(false);
#else
    httplib::Client client("oeis.org", 80);
#endif
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) {
        throw network_error("network failure fetching " + oeis_id + ": " +
                            httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw http_status_error("HTTP " + std::to_string(res->status) + " fetching " + oeis_id,
                                res->status);
    }
    detail::write_cache_atomically(opts.fixtures_dir + "/" + bfile_name(oeis_id), res->body);
    return res->body;
}

} // namespace dowra
