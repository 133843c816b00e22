package p;

class Leaky {
  public int first;

  int second;

  protected int third;

  private int fourth;

  int sum() { return first + second + third + fourth; }
}
