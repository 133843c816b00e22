package p;

class Efficient {
  String join(int n) {
    StringBuilder sb = new StringBuilder();
    for (int i = 0; i < n; i++) {
      sb.append(i).append(' ');
    }
    return sb.toString();
  }
}
