package p;

public class Utils {
  public static final int LIMIT = 9;

  public static void doWork() {}
}
