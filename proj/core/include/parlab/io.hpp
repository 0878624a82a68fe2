#ifndef PARLAB_IO_HPP
#define PARLAB_IO_HPP

#include <stdexcept>
#include <string>

#include "parlab/matrix.hpp"
#include "parlab/par.hpp"
#include "parlab/protocol.hpp"

namespace parlab {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `row,col,label`, row-major.
std::string matrix_csv(const ValueMatrix& m);
// Shape is one past the largest row and column index; every cell must appear once.
ValueMatrix parse_matrix_csv(const std::string& text);

// `region_id,row,col`.
std::string partition_csv(const Partition& p);
Partition parse_partition_csv(const std::string& text, Index rows, Index cols);

// `region_id,row,col,transcript,outcome`. Outcomes come from `m`.
std::string tiling_csv(const Partition& t, const ValueMatrix& m);
// Regions whose cells form a rectangle come back as a tiling; transcripts
// become tags.
Partition parse_tiling_csv(const std::string& text, Index rows, Index cols);

// `row,col,num,den`; unlisted cells get weight 0 and the total must be exactly 1.
Distribution parse_distribution_csv(const std::string& text, Index rows, Index cols,
                                    std::string id = "file");

// Grid of transcript labels, one row of the matrix per line, padded to the
// longest label. Needs a tagged tiling.
std::string ascii_tiling(const Partition& t);

std::string read_file(const std::string& path);

}  // namespace parlab

#endif  // PARLAB_IO_HPP
