#include <editdiam/distance.hpp>

int main() {
  const editdiam::Word x{0, 1, 1}, y{1, 1, 0};
  return editdiam::indel_distance(x, y).doubled() == 2 ? 0 : 1;
}
