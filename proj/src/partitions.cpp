#include "schubert/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("Partition::parse: unbalanced brackets");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        std::string piece = body.substr(pos, comma - pos);
        if (!piece.empty()) parts.push_back(std::stoi(piece));
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int height, int width) {
    if (height < 0 || width < 0) throw std::invalid_argument("Partition::rectangle: negative side");
    if (height == 0 || width == 0) return Partition();
    return Partition(std::vector<int>(height, width));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: 1-based index");
    return i <= rows() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 0; i < mu.rows(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::fits_in_box(int height, int width) const {
    return rows() <= height && (parts_.empty() || parts_[0] <= width);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0]);
    for (int c = 1; c <= parts_[0]; ++c) {
        int count = 0;
        for (int p : parts_)
            if (p >= c) ++count;
        conj[c - 1] = count;
    }
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

bool canonical_less(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int pa = 0, pb = 0;
    int rows = std::max(a.rows(), b.rows());
    for (int i = 1; i <= rows; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

static void gen_parts(int remaining, int cap, int rows_left, std::vector<int>& acc,
                      std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (rows_left == 0) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
        acc.push_back(p);
        gen_parts(remaining - p, p, rows_left - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_of(int d) {
    return partitions_of_in_box(d, d, d);
}

std::vector<Partition> partitions_of_in_box(int d, int height, int width) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> acc;
    gen_parts(d, std::min(width, d), height, acc, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Partition> shape_interval(const Partition& lo, const Partition& hi) {
    if (!hi.contains(lo)) return {};
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int prev) {
        if (row > hi.rows()) {
            out.emplace_back(acc);
            return;
        }
        int low = lo.part(row), high = std::min(hi.part(row), prev);
        for (int p = low; p <= high; ++p) {
            acc.push_back(p);
            rec(row + 1, p == 0 ? 0 : p);
            acc.pop_back();
        }
    };
    rec(1, hi.empty() ? 0 : hi.part(1));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& nu, int k) {
    // Interlacing characterization: lambda_1 >= nu_1 >= lambda_2 >= nu_2 >= ...
    std::vector<Partition> out;
    if (k < 0) return out;
    int rows = nu.rows() + 1;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int added) {
        if (row > rows) {
            if (added == k) out.emplace_back(acc);
            return;
        }
        int low = nu.part(row);
        int high = row == 1 ? nu.part(1) + k : std::min(nu.part(row - 1), low + (k - added));
        for (int p = low; p <= high; ++p) {
            acc.push_back(p);
            rec(row + 1, added + p - low);
            acc.pop_back();
        }
    };
    rec(1, 0);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Partition> add_vertical_strips(const Partition& nu, int k) {
    std::vector<Partition> out;
    for (const Partition& lam : add_horizontal_strips(nu.conjugate(), k))
        out.push_back(lam.conjugate());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace schubert
