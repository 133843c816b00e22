package p;

class WellFormed {
  /**
   * Copies size bytes from the source buffer into the destination.
   * @param size the number of bytes to copy
   * @return the count actually copied
   * @throws IOException when the destination rejects the write
   */
  int copy(int size) throws IOException { return size; }
}
