#ifndef SCHUBERT_PARTITIONS_HPP
#define SCHUBERT_PARTITIONS_HPP

#include <string>
#include <vector>

namespace schubert {

/* Integer partition: weakly decreasing positive parts, trailing zeros dropped
 * on construction. */
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);  // "[2,2,1]" (brackets optional)
    static Partition rectangle(int height, int width);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                 // |lambda|, number of boxes
    int rows() const { return int(parts_.size()); }
    int part(int i) const;            // lambda_i, 1-based, 0 past the end
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& mu) const;        // mu subset of lambda, rowwise
    bool fits_in_box(int height, int width) const;
    Partition conjugate() const;

    std::string str() const;  // "[2,2,1]"; empty partition prints "[]"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  private:
    std::vector<int> parts_;
};

/* Canonical order: by size, then lexicographically decreasing on parts.  The
 * second key refines dominance within each degree, so sorted output lists
 * dominance-larger shapes first. */
bool canonical_less(const Partition& a, const Partition& b);
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

/* True iff the partial sums of a weakly dominate those of b (same size). */
bool dominates(const Partition& a, const Partition& b);

std::vector<Partition> partitions_of(int d);
std::vector<Partition> partitions_of_in_box(int d, int height, int width);
/* All mu with lo subset mu subset hi, in canonical order. */
std::vector<Partition> shape_interval(const Partition& lo, const Partition& hi);
/* All lambda obtained from nu by adding a horizontal (resp. vertical) k-strip:
 * nu subset lambda, |lambda/nu| = k, no two added boxes in one column (resp. row). */
std::vector<Partition> add_horizontal_strips(const Partition& nu, int k);
std::vector<Partition> add_vertical_strips(const Partition& nu, int k);

}  // namespace schubert

#endif
