package q.other;

class Wrong {
  void noop() {}
}
