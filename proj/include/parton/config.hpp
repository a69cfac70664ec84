#pragma once

#include <fstream>
#include <map>
#include <sstream>

#include "numutil.hpp"

namespace parton {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// runtime configuration shared by the CLI subcommands; every field has a
// default and the whole struct round-trips through the flat key=value file
struct RunConfig {
    std::string suite = "all";
    std::vector<long long> primes = {2, 3, 5, 7};
    int truncation = 10;
    int precision = 32;
    long long modulus = 5;
    long long char_index = 1;
    int weight = 12;
    std::string s_grid = "2:3:3";
    std::string t_grid = "0:3:20";
    std::string y_grid = "0.5:2:4";
    std::string out;
    std::string format = "csv";

    static std::string primes_text(const std::vector<long long>& ps) {
        std::string s;
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(ps[i]);
        }
        return s;
    }

    static std::vector<long long> parse_primes(const std::string& text) {
        std::vector<long long> out;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            long long p = std::stoll(tok);
            if (!is_prime(p)) throw ConfigError("not a prime: " + tok);
            out.push_back(p);
        }
        if (out.empty()) throw ConfigError("empty prime list");
        return out;
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "suite = " << suite << "\n"
           << "primes = " << primes_text(primes) << "\n"
           << "truncation = " << truncation << "\n"
           << "precision = " << precision << "\n"
           << "modulus = " << modulus << "\n"
           << "char-index = " << char_index << "\n"
           << "weight = " << weight << "\n"
           << "s-grid = " << s_grid << "\n"
           << "t-grid = " << t_grid << "\n"
           << "y-grid = " << y_grid << "\n"
           << "out = " << out << "\n"
           << "format = " << format << "\n";
        return os.str();
    }

    void apply(const std::string& key, const std::string& value) {
        if (key == "suite") suite = value;
        else if (key == "primes") primes = parse_primes(value);
        else if (key == "truncation") truncation = std::stoi(value);
        else if (key == "precision") precision = std::stoi(value);
        else if (key == "modulus") modulus = std::stoll(value);
        else if (key == "char-index") char_index = std::stoll(value);
        else if (key == "weight") weight = std::stoi(value);
        else if (key == "s-grid") s_grid = value;
        else if (key == "t-grid") t_grid = value;
        else if (key == "y-grid") y_grid = value;
        else if (key == "out") out = value;
        else if (key == "format") format = value;
        else throw ConfigError("unknown config key: " + key);
    }

    static RunConfig from_text(const std::string& text) {
        RunConfig cfg;
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            auto eq = line.find('=');
            if (eq == std::string::npos) {
                if (line.find_first_not_of(" \t\r") != std::string::npos)
                    throw ConfigError("malformed config line: " + line);
                continue;
            }
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
        return cfg;
    }

    static RunConfig from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot read config file: " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return from_text(ss.str());
    }
};

// "a:b:n" inclusive grid
inline std::vector<double> parse_grid(const std::string& spec) {
    double a, b;
    int n;
    char c1, c2;
    std::istringstream is(spec);
    if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
        throw ConfigError("bad grid spec (want start:stop:count): " + spec);
    return linspace(a, b, n);
}

}  // namespace parton
